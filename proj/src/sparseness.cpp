#include "wsat/sparseness.hpp"

#include <algorithm>

#include "wsat/combinatorics.hpp"

namespace wsat {

SparsenessWitness sparseness(const Hypergraph& H) {
    if (H.edge_count() == 0)
        throw PreconditionError("sparseness undefined: hypergraph has no edges");
    // Sizes 0..r, subsets of [1..n] lexicographically within a size. A full
    // edge is always a witness (edges are distinct r-sets), so size r succeeds.
    for (int size = 0; size <= H.r(); ++size) {
        SparsenessWitness found;
        bool have = false;
        for_each_combination(H.n(), size, [&](const std::vector<int>& c) {
            std::vector<Vertex> subset(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) subset[i] = c[i] + 1;
            const Edge* container = nullptr;
            int count = 0;
            for (const Edge& e : H.edges()) {
                if (std::includes(e.begin(), e.end(), subset.begin(), subset.end())) {
                    if (++count > 1) break;
                    container = &e;
                }
            }
            if (count == 1) {
                found = SparsenessWitness{size, std::move(subset), *container};
                have = true;
                return false;  // lex-first S of this size; its lex-first U is the scan's first hit
            }
            return true;
        });
        if (have) return found;
    }
    throw Error("internal: sparseness search failed");  // unreachable
}

ConjecturePreconditions check_conjecture_preconditions(const Hypergraph& H) {
    if (H.edge_count() < 2)
        throw PreconditionError(
            "hypothesis violated: H must have at least two edges (this forces sparseness >= 1); got " +
            std::to_string(H.edge_count()));
    return ConjecturePreconditions{H.n(), sparseness(H).s};
}

}  // namespace wsat
