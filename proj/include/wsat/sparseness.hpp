#pragma once

#include "wsat/hypergraph.hpp"

namespace wsat {

// Certifies the sparseness value: S is contained in exactly one edge U, and no
// smaller vertex subset has a unique containing edge.
struct SparsenessWitness {
    int s = 0;
    std::vector<Vertex> subset;  // S, sorted, |S| = s
    Edge unique_edge;            // U, the single edge with S subseteq U
};

// Smallest S with a unique containing edge; ties broken by lexicographically
// smallest S, then lexicographically smallest U. Throws PreconditionError on
// an empty edge set.
SparsenessWitness sparseness(const Hypergraph& H);

struct ConjecturePreconditions {
    int v = 0;  // |V(H)|, including isolated vertices
    int s = 0;  // sparseness, >= 1 whenever H has >= 2 edges
};

// Throws PreconditionError unless H has at least two edges.
ConjecturePreconditions check_conjecture_preconditions(const Hypergraph& H);

}  // namespace wsat
