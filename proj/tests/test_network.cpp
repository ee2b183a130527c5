#include <set>
#include <sstream>

#include "doctest.h"
#include "misfit/network.hpp"

using namespace misfit;

namespace {

void check_simple_undirected(const Graph& g) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto adj = g.neighbors(u);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            CHECK(adj[i] != u);
            if (i > 0) CHECK(adj[i - 1] < adj[i]);
            CHECK(g.has_edge(adj[i], u));
        }
    }
}

}  // namespace

TEST_CASE("pure ring lattice at beta = 0") {
    Rng rng(1);
    const Graph g = generate_nws({10, 4, 0.0}, rng);
    CHECK(g.edge_count() == 20);
    for (NodeId v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
    const auto n0 = g.neighbors(0);
    CHECK(std::vector<NodeId>(n0.begin(), n0.end()) == std::vector<NodeId>{1, 2, 8, 9});
    check_simple_undirected(g);
}

TEST_CASE("neighbors") {
    Rng rng(1);
    const Graph ring = generate_nws({5, 2, 0.0}, rng);
    const auto n0 = neighbors(ring, 0);
    CHECK(std::vector<NodeId>(n0.begin(), n0.end()) == std::vector<NodeId>{1, 4});
    CHECK_THROWS_AS(ring.neighbors(5), std::out_of_range);

    const Graph g = generate_nws({50, 6, 0.5}, rng);
    for (NodeId v = 0; v < 50; ++v) {
        const auto adj = neighbors(g, v);
        CHECK(std::find(adj.begin(), adj.end(), v) == adj.end());
    }
    CHECK(g.has_edge(3, 7) == g.has_edge(7, 3));
}

TEST_CASE("spec validation") {
    Rng rng(1);
    CHECK_THROWS_AS(generate_nws({10, 3, 0.1}, rng), ConfigError);
    CHECK_THROWS_AS(generate_nws({10, 10, 0.1}, rng), ConfigError);
    CHECK_THROWS_AS(generate_nws({10, 12, 0.1}, rng), ConfigError);
    CHECK_THROWS_AS(generate_nws({10, 4, 1.5}, rng), ConfigError);
}

TEST_CASE("shortcut count follows one trial per lattice edge") {
    // beta = 1: every one of the n*k/2 trials adds an edge, so exactly n*k edges.
    Rng rng(2);
    for (int rep = 0; rep < 3; ++rep) {
        const Graph g = generate_nws({1000, 100, 1.0}, rng);
        CHECK(g.edge_count() == 100'000);
    }
    // beta = 0.3: n*k/2 + Binomial(n*k/2, 0.3); mean over 100 graphs of 200 nodes, k = 10.
    const double trials = 200.0 * 10 / 2;
    double mean_shortcuts = 0.0;
    for (int rep = 0; rep < 100; ++rep)
        mean_shortcuts += static_cast<double>(generate_nws({200, 10, 0.3}, rng).edge_count()) - trials;
    mean_shortcuts /= 100;
    const double sd_of_mean = std::sqrt(trials * 0.3 * 0.7 / 100);
    CHECK(std::abs(mean_shortcuts - 0.3 * trials) < 4 * sd_of_mean);
}

TEST_CASE("invariants over beta") {
    Rng rng(3);
    for (double beta : {0.0, 0.001, 0.01, 0.1, 0.5, 1.0}) {
        const Graph g = generate_nws({300, 10, beta}, rng);
        for (NodeId v = 0; v < 300; ++v) {
            CHECK(g.degree(v) >= 10);
            for (NodeId d = 1; d <= 5; ++d) CHECK(g.has_edge(v, (v + d) % 300));
        }
        CHECK(is_connected(g));
        check_simple_undirected(g);
    }
}

TEST_CASE("dense shortcuts still terminate") {
    Rng rng(4);
    const Graph g = generate_nws({12, 8, 1.0}, rng);
    CHECK(g.edge_count() == 12 * 11 / 2);
}

TEST_CASE("reproducible with a fixed seed") {
    Rng a(77), b(77);
    std::ostringstream ea, eb;
    generate_nws({400, 20, 0.2}, a).write_edge_list(ea);
    generate_nws({400, 20, 0.2}, b).write_edge_list(eb);
    CHECK(ea.str() == eb.str());
}

TEST_CASE("edge list dump") {
    Rng rng(1);
    std::ostringstream out;
    generate_nws({5, 2, 0.0}, rng).write_edge_list(out);
    CHECK(out.str() == "0 1\n0 4\n1 2\n2 3\n3 4\n");
}

TEST_CASE("path length shrinks as beta grows") {
    Rng rng(5);
    double previous = 1e9;
    for (double beta : {0.0, 0.01, 0.1, 1.0}) {
        double mean = 0.0;
        for (int rep = 0; rep < 3; ++rep) mean += mean_shortest_path(generate_nws({500, 50, beta}, rng));
        mean /= 3;
        CHECK(mean < previous);
        previous = mean;
    }
    // Lattice value by hand: distances ceil(d/25) for ring offsets d = 1..250.
    double total = 0;
    for (int d = 1; d < 500; ++d) total += std::ceil(std::min(d, 500 - d) / 25.0);
    Rng r0(0);
    CHECK(mean_shortest_path(generate_nws({500, 50, 0.0}, r0)) == doctest::Approx(total / 499));
}
