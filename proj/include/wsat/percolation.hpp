#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

// Injection V(H) -> [1..n]; image[i] is the image of H-vertex i+1.
struct Embedding {
    std::vector<Vertex> image;

    Vertex operator()(Vertex h) const { return image[static_cast<std::size_t>(h - 1)]; }

    // Image of an H-edge as a sorted host edge.
    Edge map_edge(const Edge& h_edge) const;

    bool operator==(const Embedding&) const = default;
};

// One percolation step: adding `edge` creates a copy of H, witnessed by the
// embedding f with f(designated) = edge and every other image edge already
// present in the host at the moment the step executes.
struct PercolationStep {
    Edge edge;
    Embedding f;
    Edge designated;  // the H-edge mapped onto `edge`
};

enum class FinalClaim { Complete, Closure };

struct PercolationCertificate {
    Hypergraph initial;
    std::vector<PercolationStep> steps;
    FinalClaim final_claim = FinalClaim::Closure;
};

struct Witness {
    Embedding f;
    Edge designated;
};

// Deterministic witness search: designated edges of H in lexicographic order,
// bijections onto `e` in lexicographic image order, remaining H-vertices
// extended by backtracking in increasing label order with ascending candidate
// images, pruning on any fully-mapped absent edge. First hit wins.
// Returns nullopt when adding `e` creates no copy of H. Throws
// PreconditionError if `e` is already present or H has no edges.
std::optional<Witness> find_witness(const Hypergraph& F, const Edge& e, const Hypergraph& H);

struct ClosureResult {
    Hypergraph fixed_point;
    PercolationCertificate certificate;
};

// Repeatedly scans missing edges in lexicographic order, committing the first
// addable edge and rescanning from the start, until a full scan adds nothing.
// The fixed point is unique regardless of scan order (monotone automaton).
ClosureResult closure(const Hypergraph& F, const Hypergraph& H);

// Same process with candidates scanned in the given order instead; the order
// must contain every missing edge of F. The fixed point must agree with
// closure() by confluence; the certificate may differ.
ClosureResult closure_with_scan_order(const Hypergraph& F, const Hypergraph& H,
                                      const EdgeList& scan_order);

struct SaturationResult {
    bool saturated = false;
    PercolationCertificate certificate;
};

// True iff the closure of F under H-bootstrap percolation is K^r_n.
SaturationResult is_weakly_saturated(const Hypergraph& F, const Hypergraph& H);

struct VerifyResult {
    bool ok = false;
    std::optional<std::size_t> failed_step;  // first invalid step, if any
    std::string reason;
};

// Replays the certificate using only edge-membership queries: each step's edge
// must be absent, its embedding injective with f(designated) = edge, and every
// other image edge present; a Complete claim must end at K^r_n.
VerifyResult verify_certificate(const PercolationCertificate& cert, const Hypergraph& H);

}  // namespace wsat
