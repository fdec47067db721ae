#include "wsat/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "wsat/amalgamation.hpp"
#include "wsat/combinatorics.hpp"
#include "wsat/sparseness.hpp"

namespace wsat {

std::string method_name(WsatMethod m) {
    switch (m) {
        case WsatMethod::Exact: return "exact";
        case WsatMethod::UpperBoundConstruction: return "upper-bound-construction";
        case WsatMethod::UpperBoundPartial: return "upper-bound-partial";
    }
    return "unknown";
}

std::string hypergraph_id(const Hypergraph& H) {
    std::string s = serialize_hypergraph(H);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

namespace {

// Edge-index permutations induced by all vertex permutations of [1..n].
std::vector<std::vector<int>> orbit_index_maps(int n, const EdgeList& all_edges) {
    std::map<Edge, int> index_of;
    for (std::size_t i = 0; i < all_edges.size(); ++i)
        index_of.emplace(all_edges[i], static_cast<int>(i));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> m(all_edges.size());
        Edge img;
        for (std::size_t i = 0; i < all_edges.size(); ++i) {
            img.clear();
            for (Vertex v : all_edges[i]) img.push_back(perm[static_cast<std::size_t>(v - 1)]);
            std::sort(img.begin(), img.end());
            m[i] = index_of.at(img);
        }
        maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

bool lex_minimal_in_orbit(const std::vector<int>& c, const std::vector<std::vector<int>>& maps) {
    std::vector<int> img(c.size());
    for (const std::vector<int>& m : maps) {
        for (std::size_t i = 0; i < c.size(); ++i)
            img[i] = m[static_cast<std::size_t>(c[i])];
        std::sort(img.begin(), img.end());
        if (img < c) return false;
    }
    return true;
}

// Greedy peel from K^r_n: drop edges in lexicographic passes while the result
// still percolates; stops when a full pass removes nothing.
WsatResult peel_upper_bound(int n, const Hypergraph& H, std::uint64_t checks) {
    Hypergraph current = Hypergraph::complete(n, H.r());
    bool changed = true;
    while (changed) {
        changed = false;
        const EdgeList snapshot = current.edges();
        for (const Edge& e : snapshot) {
            EdgeList reduced;
            reduced.reserve(current.edge_count() - 1);
            for (const Edge& f : current.edges())
                if (f != e) reduced.push_back(f);
            Hypergraph candidate(n, H.r(), std::move(reduced));
            ++checks;
            if (is_weakly_saturated(candidate, H).saturated) {
                current = std::move(candidate);
                changed = true;
            }
        }
    }
    ++checks;
    SaturationResult sat = is_weakly_saturated(current, H);
    return WsatResult{n,
                      hypergraph_id(H),
                      current.edge_count(),
                      current,
                      WsatMethod::UpperBoundPartial,
                      std::move(sat.certificate),
                      checks};
}

}  // namespace

WsatResult wsat_exact(int n, const Hypergraph& H, const SearchOptions& opts) {
    check_conjecture_preconditions(H);
    if (H.n() > n)
        throw InvalidParametersError("need n >= |V(H)|; got n=" + std::to_string(n) +
                                     ", |V(H)|=" + std::to_string(H.n()));
    if (opts.orbit_prune && n > 8)
        throw InvalidParametersError(
            "orbit pruning enumerates all vertex permutations and is limited to n <= 8");

    const Hypergraph complete = Hypergraph::complete(n, H.r());
    const EdgeList& all_edges = complete.edges();
    const int num_edges = static_cast<int>(all_edges.size());
    std::vector<std::vector<int>> orbit_maps;
    if (opts.orbit_prune) orbit_maps = orbit_index_maps(n, all_edges);

    std::uint64_t checks = 0;
    bool overrun = false;
    for (int k = 0; k <= num_edges && !overrun; ++k) {
        if (!opts.orbit_prune &&
            checks + binomial_capped(num_edges, k, opts.budget + 1) > opts.budget) {
            overrun = true;
            break;
        }
        std::optional<WsatResult> hit;
        for_each_combination(num_edges, k, [&](const std::vector<int>& c) {
            if (opts.orbit_prune && !lex_minimal_in_orbit(c, orbit_maps)) return true;
            if (checks == opts.budget) {
                overrun = true;
                return false;
            }
            EdgeList edges;
            edges.reserve(c.size());
            for (int i : c) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
            Hypergraph F(n, H.r(), std::move(edges));
            ++checks;
            SaturationResult sat = is_weakly_saturated(F, H);
            if (sat.saturated) {
                hit = WsatResult{n,
                                 hypergraph_id(H),
                                 static_cast<std::uint64_t>(k),
                                 std::move(F),
                                 WsatMethod::Exact,
                                 std::move(sat.certificate),
                                 checks};
                return false;
            }
            return true;
        });
        if (hit) return std::move(*hit);
    }
    return peel_upper_bound(n, H, checks);
}

WsatResult wsat_upper(int n, const Hypergraph& H, int m, const SearchOptions& opts) {
    if (n < m)
        throw InvalidParametersError("need n >= m; got n=" + std::to_string(n) +
                                     ", m=" + std::to_string(m));
    WsatResult seed = wsat_exact(m, H, opts);
    if (seed.method != WsatMethod::Exact)
        throw PreconditionError("exact seed search at m=" + std::to_string(m) +
                                " exceeded its budget; choose a smaller m or a larger budget");
    ConstructionResult c = construct(H, seed.minimizer, n, /*trust_seed=*/true);
    PercolationCertificate cert = full_certificate(c, H);
    const std::uint64_t value = c.F.edge_count();
    return WsatResult{n,
                      hypergraph_id(H),
                      value,
                      std::move(c.F),
                      WsatMethod::UpperBoundConstruction,
                      std::move(cert),
                      seed.saturation_checks};
}

}  // namespace wsat
