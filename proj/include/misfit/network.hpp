#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "misfit/error.hpp"
#include "misfit/random.hpp"

namespace misfit {

using NodeId = std::uint32_t;

struct NetworkSpec {
    std::size_t n = 1000;
    std::size_t k = 100;  // lattice degree, k/2 neighbours on each side
    double beta = 0.0;

    void validate() const;
};

/// Undirected simple graph stored as sorted adjacency lists in CSR form.
class Graph {
public:
    Graph() = default;
    // Builds from an edge list; duplicates and self-loops must already be absent.
    Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return targets_.size() / 2; }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    // Distance-1 neighbourhood, ascending. Throws std::out_of_range for bad ids.
    std::span<const NodeId> neighbors(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    void write_edge_list(std::ostream& out) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Newman-Watts-Strogatz graph.
///
/// Ring lattice plus one shortcut trial per lattice edge: with probability
/// beta a new edge joins two uniformly chosen distinct nodes that are not yet
/// adjacent (endpoints are redrawn on collision). Lattice edges are never
/// removed. Throws std::invalid_argument when the spec is invalid.
Graph generate_nws(const NetworkSpec& spec, Rng& rng);

std::span<const NodeId> neighbors(const Graph& graph, NodeId node);

bool is_connected(const Graph& graph);

// Mean BFS distance over all ordered pairs of distinct nodes; graph must be connected.
double mean_shortest_path(const Graph& graph);

}  // namespace misfit
