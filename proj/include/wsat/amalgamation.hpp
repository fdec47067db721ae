#pragma once

#include <vector>

#include "wsat/covering.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

// The amalgam F together with everything needed to regenerate its saturation
// certificate: the shared core Z, the periphery X, the seed F0, the cover of X
// whose blocks carry the F0 copies, and the per-block vertex placements.
struct ConstructionResult {
    Hypergraph F;                                 // on [1..n]
    std::vector<Vertex> Z;                        // [1..v], shared by all blocks
    std::vector<Vertex> X;                        // [v+1..n]
    Hypergraph F0;                                // seed on m vertices
    CoverFamily cover;                            // over X, k = m - v, t = s - 1
    std::vector<std::vector<Vertex>> placements;  // per block: image of [1..m]
    int s = 0;                                    // sparseness of H
};

// Saturation schedule in two phases: (A) completing each block's clique by
// replaying the seed certificate, (B) the remaining edges layered by the size
// of their intersection with X.
struct LayeredSchedule {
    struct Layer {
        int x_intersection = 0;  // |e cap X| shared by every step in the layer
        std::vector<PercolationStep> steps;
    };
    std::vector<std::vector<PercolationStep>> block_completions;  // phase A
    std::vector<Layer> layers;                                    // phase B

    std::vector<PercolationStep> flatten() const;
};

// Builds the amalgam on [1..n]: Z = [1..v], X = [v+1..n], a cover of X with
// k = m - v and t = s - 1 (exact when inside the size guard, greedy beyond),
// and one copy of F0 per block W under the order-preserving bijection
// [1..m] -> sorted(Z v W). Verifies that F0 is weakly H-saturated unless
// trust_seed is set. Requires m >= v + s - 1, n >= m, and >= 2 edges in H.
ConstructionResult construct(const Hypergraph& H, const Hypergraph& F0, int n,
                             bool trust_seed = false);

// Phase B only. Requires Z, X to partition [1..n], |Z| >= |V(H)|, and every
// edge with |e cap X| <= s - 1 already present in F. For j = s-1 .. r-1, adds
// each missing edge e with |e cap X| = j+1 in lexicographic order, with the
// witness mapping S onto the first s elements of e cap X, U \ S onto the rest
// of e, and V(H) \ U onto the first |V(H)| - r elements of Z \ e, all
// order-preserving. Every non-designated image edge then meets X in at most j
// vertices, so it is already present; this is asserted during generation.
LayeredSchedule claim_schedule(const Hypergraph& F, const std::vector<Vertex>& Z,
                               const std::vector<Vertex>& X, const Hypergraph& H);

// Phase A (replaying F0's complete-certificate per block in cover order,
// skipping steps whose edge is already present) followed by claim_schedule.
// The result is a certificate from c.F to the complete hypergraph; it is
// verified internally before being returned.
PercolationCertificate full_certificate(const ConstructionResult& c, const Hypergraph& H);

}  // namespace wsat
