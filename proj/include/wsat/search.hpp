#pragma once

#include <cstdint>
#include <string>

#include "wsat/hypergraph.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

enum class WsatMethod {
    Exact,                   // exhaustive: no smaller edge set percolates
    UpperBoundConstruction,  // amalgam of an exact seed; upper bound only
    UpperBoundPartial        // search hit its budget; best bound found
};

std::string method_name(WsatMethod m);

struct WsatResult {
    int n = 0;
    std::string h_id;
    std::uint64_t value = 0;
    Hypergraph minimizer;
    WsatMethod method = WsatMethod::Exact;
    PercolationCertificate certificate;  // percolation proof for the minimizer
    std::uint64_t saturation_checks = 0;
};

struct SearchOptions {
    std::uint64_t budget = 200'000;  // cap on is_weakly_saturated invocations
    bool orbit_prune = false;        // skip candidates not lex-minimal under S_n
};

// One-line identifier for a hypergraph: its text serialization with newlines
// collapsed to ';'.
std::string hypergraph_id(const Hypergraph& H);

// Iterative deepening over k = 0, 1, 2, ...: tests the k-subsets of the
// possible edges in lexicographic order and returns the first percolating one;
// exhausting level k-1 certifies minimality. With orbit_prune (n <= 8 only),
// candidates that are not lexicographically minimal in their S_n-orbit are
// skipped; the lex-first minimizer is always orbit-minimal, so the result is
// unchanged. On budget overrun, falls back to greedily peeling edges from the
// complete hypergraph and returns that bound flagged UpperBoundPartial.
WsatResult wsat_exact(int n, const Hypergraph& H, const SearchOptions& opts = {});

// Upper bound for large n: exact seed F0 at m vertices, then the block
// construction at n. value = |E(F)|, certificate = the full two-phase
// schedule. Requires the seed search to complete exactly.
WsatResult wsat_upper(int n, const Hypergraph& H, int m, const SearchOptions& opts = {});

}  // namespace wsat
