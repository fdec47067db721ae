#include "wsat/percolation.hpp"

#include <algorithm>
#include <set>

#include "wsat/combinatorics.hpp"

namespace wsat {

Edge Embedding::map_edge(const Edge& h_edge) const {
    Edge out;
    out.reserve(h_edge.size());
    for (Vertex h : h_edge) out.push_back((*this)(h));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_compatible(const Hypergraph& F, const Hypergraph& H) {
    if (F.r() != H.r())
        throw InvalidParametersError("uniformity mismatch: host r=" + std::to_string(F.r()) +
                                     ", H r=" + std::to_string(H.r()));
    if (H.edge_count() == 0)
        throw PreconditionError("H must have at least one edge");
}

// Backtracking extension of a partial embedding. `remaining` lists the not yet
// mapped H-vertices in increasing order; completed_at[p] holds the H-edges
// (other than the designated one) whose last unmapped vertex is remaining[p].
struct ExtensionSearch {
    const Hypergraph& host;
    const std::vector<Vertex>& remaining;
    const std::vector<std::vector<const Edge*>>& completed_at;
    std::vector<Vertex>& image;       // 1-based H-vertex -> host vertex, 0 = unset
    std::vector<char>& used;

    bool extend(std::size_t p) {
        if (p == remaining.size()) return true;
        const Vertex h = remaining[p];
        for (Vertex cand = 1; cand <= host.n(); ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            image[static_cast<std::size_t>(h - 1)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            bool ok = true;
            Edge mapped;
            for (const Edge* he : completed_at[p]) {
                mapped.clear();
                for (Vertex u : *he) mapped.push_back(image[static_cast<std::size_t>(u - 1)]);
                std::sort(mapped.begin(), mapped.end());
                if (!host.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(p + 1)) return true;
            used[static_cast<std::size_t>(cand)] = 0;
            image[static_cast<std::size_t>(h - 1)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Witness> find_witness(const Hypergraph& F, const Edge& e, const Hypergraph& H) {
    check_compatible(F, H);
    validate_edge(e, F.n(), F.r(), "candidate edge");
    if (F.has_edge(e)) throw PreconditionError("candidate edge is already present in the host");
    if (H.n() > F.n()) return std::nullopt;

    const int v = H.n();
    std::vector<Vertex> image(static_cast<std::size_t>(v), 0);
    std::vector<char> used(static_cast<std::size_t>(F.n()) + 1, 0);

    for (const Edge& designated : H.edges()) {
        // Remaining vertices and the point at which each other H-edge becomes
        // fully mapped, given that all of `designated` is mapped up front.
        std::vector<Vertex> remaining;
        for (Vertex h = 1; h <= v; ++h)
            if (!std::binary_search(designated.begin(), designated.end(), h)) remaining.push_back(h);
        std::vector<std::vector<const Edge*>> completed_at(remaining.size());
        for (const Edge& he : H.edges()) {
            if (he == designated) continue;
            std::size_t last = 0;
            bool outside = false;
            for (std::size_t p = 0; p < remaining.size(); ++p) {
                if (std::binary_search(he.begin(), he.end(), remaining[p])) {
                    last = p;
                    outside = true;
                }
            }
            // Distinct r-sets, so every other edge leaves `designated` somewhere.
            if (outside) completed_at[last].push_back(&he);
        }

        Edge img = e;  // permutations of e in lexicographic image order
        do {
            std::fill(image.begin(), image.end(), 0);
            std::fill(used.begin(), used.end(), 0);
            for (std::size_t i = 0; i < designated.size(); ++i) {
                image[static_cast<std::size_t>(designated[i] - 1)] = img[i];
                used[static_cast<std::size_t>(img[i])] = 1;
            }
            ExtensionSearch search{F, remaining, completed_at, image, used};
            if (search.extend(0)) {
                return Witness{Embedding{image}, designated};
            }
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return std::nullopt;
}

namespace {

ClosureResult closure_impl(const Hypergraph& F, const Hypergraph& H, EdgeList missing) {
    Hypergraph current = F;
    std::vector<PercolationStep> steps;
    bool added = true;
    while (added) {
        added = false;
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (auto w = find_witness(current, missing[i], H)) {
                steps.push_back(PercolationStep{missing[i], std::move(w->f), std::move(w->designated)});
                current = current.with_edge(missing[i]);
                missing.erase(missing.begin() + static_cast<std::ptrdiff_t>(i));
                added = true;
                break;  // rescan from the start
            }
        }
    }
    const FinalClaim claim = current.is_complete() ? FinalClaim::Complete : FinalClaim::Closure;
    return ClosureResult{std::move(current), PercolationCertificate{F, std::move(steps), claim}};
}

}  // namespace

ClosureResult closure(const Hypergraph& F, const Hypergraph& H) {
    check_compatible(F, H);
    return closure_impl(F, H, F.missing_edges());
}

ClosureResult closure_with_scan_order(const Hypergraph& F, const Hypergraph& H,
                                      const EdgeList& scan_order) {
    check_compatible(F, H);
    EdgeList missing;
    std::set<Edge> seen;
    for (const Edge& e : scan_order) {
        validate_edge(e, F.n(), F.r(), "scan-order edge");
        if (!F.has_edge(e) && seen.insert(e).second) missing.push_back(e);
    }
    if (missing.size() != F.missing_edges().size())
        throw PreconditionError("scan order does not contain every missing edge");
    return closure_impl(F, H, std::move(missing));
}

SaturationResult is_weakly_saturated(const Hypergraph& F, const Hypergraph& H) {
    ClosureResult res = closure(F, H);
    return SaturationResult{res.certificate.final_claim == FinalClaim::Complete,
                            std::move(res.certificate)};
}

namespace {

VerifyResult fail_at(std::size_t step, std::string reason) {
    return VerifyResult{false, step, std::move(reason)};
}

}  // namespace

VerifyResult verify_certificate(const PercolationCertificate& cert, const Hypergraph& H) {
    const Hypergraph& init = cert.initial;
    if (init.r() != H.r())
        return VerifyResult{false, std::nullopt, "uniformity mismatch between certificate and H"};
    const int n = init.n();
    const int v = H.n();

    EdgeSet present(init);
    std::uint64_t count = init.edge_count();

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const PercolationStep& step = cert.steps[i];

        Edge e = step.edge;
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != init.r())
            return fail_at(i, "added edge has wrong arity");
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 1 || e[j] > n) return fail_at(i, "added edge has out-of-range vertex");
            if (j > 0 && e[j] == e[j - 1]) return fail_at(i, "added edge repeats a vertex");
        }
        if (present.contains(e)) return fail_at(i, "added edge is already present");

        const std::vector<Vertex>& image = step.f.image;
        if (static_cast<int>(image.size()) != v)
            return fail_at(i, "embedding does not cover V(H)");
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex x : image) {
            if (x < 1 || x > n) return fail_at(i, "embedding image out of range");
            if (used[static_cast<std::size_t>(x)]) return fail_at(i, "embedding is not injective");
            used[static_cast<std::size_t>(x)] = 1;
        }

        Edge designated = step.designated;
        std::sort(designated.begin(), designated.end());
        if (!H.has_edge(designated)) return fail_at(i, "designated set is not an edge of H");
        if (step.f.map_edge(designated) != e)
            return fail_at(i, "embedding does not map the designated edge onto the added edge");

        for (const Edge& he : H.edges()) {
            if (he == designated) continue;
            if (!present.contains(step.f.map_edge(he)))
                return fail_at(i, "witness edge not present in the host");
        }

        present.insert(e);
        ++count;
    }

    if (cert.final_claim == FinalClaim::Complete && count != binomial(n, init.r()))
        return VerifyResult{false, std::nullopt,
                            "claimed complete but " + std::to_string(count) + " of " +
                                std::to_string(binomial(n, init.r())) + " edges reached"};
    return VerifyResult{true, std::nullopt, ""};
}

}  // namespace wsat
