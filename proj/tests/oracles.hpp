#pragma once

#include <cstdint>
#include <optional>

#include "wsat/hypergraph.hpp"
#include "wsat/sparseness.hpp"

// Brute-force re-derivations used to pin expected values. Deliberately naive:
// plain subset / injection enumeration, sharing no search or pruning logic
// with the library.
namespace oracle {

wsat::SparsenessWitness sparseness(const wsat::Hypergraph& H);

// True iff some injection V(H) -> [1..n] maps one edge of H onto e and every
// other edge of H into the present edges of F.
bool creates_copy(const wsat::Hypergraph& F, const wsat::Edge& e, const wsat::Hypergraph& H);

// Percolation fixed point by repeated passes; with order_seed set, each pass
// scans the absent edges in a freshly shuffled order.
wsat::EdgeList closure_edges(const wsat::Hypergraph& F, const wsat::Hypergraph& H,
                             std::optional<unsigned> order_seed = std::nullopt);

bool weakly_saturated(const wsat::Hypergraph& F, const wsat::Hypergraph& H);

// Smallest k for which some k-edge hypergraph on [1..n] percolates, scanning
// every k-subset of the possible edges per level.
std::uint64_t wsat_value(int n, const wsat::Hypergraph& H);

// Exhaustive minimum cover size over all block families of size <= max_size;
// returns max_size + 1 if none covers. Requires C(size_x, t) <= 64.
std::size_t min_cover_size(int size_x, int k, int t, std::size_t max_size);

}  // namespace oracle
