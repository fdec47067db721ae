#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

// Family of k-blocks over a ground set X such that every t-subset of X lies in
// at least one block. rodl_bound records (1+delta)*C(|X|,t)/C(k,t) for size
// reporting against the classical covering bound.
struct CoverFamily {
    std::vector<Vertex> ground_set;            // X, sorted
    int k = 0;
    int t = 0;
    std::vector<std::vector<Vertex>> blocks;   // sorted blocks in lexicographic order
    double delta = 0.0;
    double rodl_bound = 0.0;
};

// Greedy set cover over the ground set [1..size_x]: repeatedly adds the block
// covering the most uncovered t-subsets, ties broken by lexicographically
// smallest block. For t = 0 emits the single lexicographically first block.
CoverFamily greedy_cover(int size_x, int k, int t, double delta = 0.0);

// Minimum-cardinality cover by branch and bound: branches on the blocks
// containing the lexicographically first uncovered t-subset, bounds by
// ceil(uncovered / C(k,t)). Guarded: C(|X|,t) <= 10^4 and C(|X|,k) <= 10^5,
// otherwise throws SizeGuardError advising greedy_cover.
CoverFamily exact_min_cover(int size_x, int k, int t, double delta = 0.0);

struct CoverCheck {
    bool ok = false;
    std::optional<std::vector<Vertex>> first_uncovered;  // lex-first missed t-subset
    std::string reason;
};

// Exhaustive check of the covering property plus block well-formedness; an
// empty block list fails (the extension property needs at least one block).
CoverCheck verify_cover(const CoverFamily& c);

// ceil(C(size_x, t) / C(k, t)); every valid cover has at least this many blocks.
std::uint64_t cover_lower_bound(int size_x, int k, int t);

// Order-preserving relabeling of a cover built on [1..size_x] onto an actual
// ground set (sorted, same size).
CoverFamily relabel_cover(const CoverFamily& c, const std::vector<Vertex>& target_ground);

}  // namespace wsat
