#include "misfit/network.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace misfit {

void NetworkSpec::validate() const {
    if (k == 0 || k % 2 != 0) throw ConfigError("network_k", "must be a positive even number");
    if (k >= n) throw ConfigError("network_k", "must be smaller than n_agents");
    if (n > std::numeric_limits<NodeId>::max()) throw ConfigError("n_agents", "too large for a network");
    if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("beta", "outside [0, 1]");
}

Graph::Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) : offsets_(n + 1, 0) {
    for (const auto& [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        targets_[fill[u]++] = v;
        targets_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v >= node_count())
        throw std::out_of_range("node " + std::to_string(v) + " not in graph of " +
                                std::to_string(node_count()) + " nodes");
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

void Graph::write_edge_list(std::ostream& out) const {
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

std::span<const NodeId> neighbors(const Graph& graph, NodeId node) { return graph.neighbors(node); }

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
}

}  // namespace

Graph generate_nws(const NetworkSpec& spec, Rng& rng) {
    spec.validate();
    const auto n = static_cast<NodeId>(spec.n);
    const auto half = static_cast<NodeId>(spec.k / 2);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(spec.n * half * (spec.beta > 0.0 ? 2 : 1));
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.capacity() * 2);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId d = 1; d <= half; ++d) {
            const NodeId j = (i + d) % n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
            present.insert(edge_key(i, j));
        }
    }

    if (spec.beta > 0.0) {
        const std::size_t lattice_edges = edges.size();
        // A node can end up adjacent to everyone; stop adding once the graph is complete.
        const std::size_t max_edges = spec.n * (spec.n - 1) / 2;
        std::bernoulli_distribution trial(spec.beta);
        std::uniform_int_distribution<NodeId> pick(0, n - 1);
        for (std::size_t e = 0; e < lattice_edges; ++e) {
            if (!trial(rng) || present.size() >= max_edges) continue;
            NodeId u, v;
            do {
                u = pick(rng);
                v = pick(rng);
            } while (u == v || present.contains(edge_key(u, v)));
            present.insert(edge_key(u, v));
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph(spec.n, edges);
}

namespace {

// Distances from `source`; unreachable nodes stay at max().
std::vector<std::size_t> bfs(const Graph& graph, NodeId source) {
    std::vector<std::size_t> dist(graph.node_count(), std::numeric_limits<std::size_t>::max());
    std::queue<NodeId> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : graph.neighbors(u)) {
            if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& graph) {
    if (graph.node_count() == 0) return true;
    const auto dist = bfs(graph, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

double mean_shortest_path(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n < 2) return 0.0;
    double total = 0.0;
    for (NodeId s = 0; s < n; ++s) {
        for (std::size_t d : bfs(graph, s)) {
            if (d == std::numeric_limits<std::size_t>::max())
                throw std::invalid_argument("mean_shortest_path needs a connected graph");
            total += static_cast<double>(d);
        }
    }
    return total / static_cast<double>(n * (n - 1));
}

}  // namespace misfit
