#pragma once

#include <algorithm>
#include <random>

#include "wsat/combinatorics.hpp"
#include "wsat/hypergraph.hpp"

// Small graphs shared across the test files.
namespace fixtures {

inline wsat::Hypergraph k3() { return wsat::Hypergraph::complete(3, 2); }
inline wsat::Hypergraph k4() { return wsat::Hypergraph::complete(4, 2); }

// Path on 3 vertices.
inline wsat::Hypergraph p3() { return wsat::Hypergraph(3, 2, {{1, 2}, {2, 3}}); }

// Path on 4 vertices.
inline wsat::Hypergraph path4() { return wsat::Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}}); }

// Star with center 1 on n vertices.
inline wsat::Hypergraph star(int n) {
    wsat::EdgeList edges;
    for (int w = 2; w <= n; ++w) edges.push_back({1, w});
    return wsat::Hypergraph(n, 2, edges);
}

// Two triples sharing a pair; sparseness 1.
inline wsat::Hypergraph h124() { return wsat::Hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}}); }

// Random r-uniform hypergraph on [1..n] where each possible edge appears
// with probability density (at least min_edges edges, filled lexicographically).
inline wsat::Hypergraph random_hypergraph(std::mt19937& rng, int n, int r, double density,
                                          std::size_t min_edges = 0) {
    std::bernoulli_distribution keep(density);
    wsat::EdgeList all, edges;
    wsat::for_each_combination(n, r, [&](const std::vector<int>& c) {
        wsat::Edge e;
        for (int i : c) e.push_back(i + 1);
        all.push_back(e);
        return true;
    });
    for (const wsat::Edge& e : all)
        if (keep(rng)) edges.push_back(e);
    for (std::size_t i = 0; i < all.size() && edges.size() < min_edges; ++i)
        if (std::find(edges.begin(), edges.end(), all[i]) == edges.end()) edges.push_back(all[i]);
    return wsat::Hypergraph(n, r, edges);
}

}  // namespace fixtures
