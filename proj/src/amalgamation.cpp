#include "wsat/amalgamation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wsat/sparseness.hpp"

namespace wsat {

std::vector<PercolationStep> LayeredSchedule::flatten() const {
    std::vector<PercolationStep> out;
    for (const auto& block : block_completions) out.insert(out.end(), block.begin(), block.end());
    for (const Layer& layer : layers) out.insert(out.end(), layer.steps.begin(), layer.steps.end());
    return out;
}

namespace {

std::string edge_str(const Edge& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s + "}";
}

Edge map_through(const std::vector<Vertex>& place, const Edge& e) {
    Edge out;
    out.reserve(e.size());
    for (Vertex u : e) out.push_back(place[static_cast<std::size_t>(u - 1)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConstructionResult construct(const Hypergraph& H, const Hypergraph& F0, int n, bool trust_seed) {
    const ConjecturePreconditions pre = check_conjecture_preconditions(H);
    const int v = pre.v;
    const int s = pre.s;
    const int m = F0.n();
    if (F0.r() != H.r())
        throw InvalidParametersError("seed uniformity r=" + std::to_string(F0.r()) +
                                     " does not match H (r=" + std::to_string(H.r()) + ")");
    if (m < v + s - 1)
        throw InvalidParametersError("seed has m=" + std::to_string(m) +
                                     " vertices; need m >= v + s - 1 = " + std::to_string(v + s - 1));
    if (n < m)
        throw InvalidParametersError("need n >= m; got n=" + std::to_string(n) +
                                     ", m=" + std::to_string(m));
    if (!trust_seed && !is_weakly_saturated(F0, H).saturated)
        throw InvalidSeedError("seed F0 is not weakly H-saturated on " + std::to_string(m) +
                               " vertices");

    const int k = m - v;
    const int t = s - 1;
    const int size_x = n - v;
    CoverFamily base;
    try {
        base = exact_min_cover(size_x, k, t);
    } catch (const SizeGuardError&) {
        base = greedy_cover(size_x, k, t);
    }

    std::vector<Vertex> Z(static_cast<std::size_t>(v));
    std::iota(Z.begin(), Z.end(), 1);
    std::vector<Vertex> X(static_cast<std::size_t>(size_x));
    std::iota(X.begin(), X.end(), v + 1);
    const CoverFamily cover = relabel_cover(base, X);

    std::vector<std::vector<Vertex>> placements;
    std::set<Edge> edge_union;
    for (const std::vector<Vertex>& W : cover.blocks) {
        // sorted(Z v W) is Z followed by W: Z = [1..v] and W lives above v
        std::vector<Vertex> place = Z;
        place.insert(place.end(), W.begin(), W.end());
        for (const Edge& e0 : F0.edges()) edge_union.insert(map_through(place, e0));
        placements.push_back(std::move(place));
    }
    EdgeList edges(edge_union.begin(), edge_union.end());
    Hypergraph F(n, H.r(), std::move(edges));
    return ConstructionResult{std::move(F), std::move(Z),          std::move(X), F0,
                              cover,        std::move(placements), s};
}

LayeredSchedule claim_schedule(const Hypergraph& F, const std::vector<Vertex>& Z,
                               const std::vector<Vertex>& X, const Hypergraph& H) {
    const int n = F.n();
    const int r = F.r();
    if (H.r() != r)
        throw InvalidParametersError("uniformity mismatch between F and H");

    std::vector<char> side(static_cast<std::size_t>(n) + 1, 0);  // 1 = Z, 2 = X
    auto place_side = [&](const std::vector<Vertex>& part, char tag, const char* name) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            const Vertex x = part[i];
            if (x < 1 || x > n)
                throw PreconditionError(std::string(name) + " contains out-of-range vertex " +
                                        std::to_string(x));
            if (i > 0 && x <= part[i - 1])
                throw PreconditionError(std::string(name) + " is not strictly increasing");
            if (side[static_cast<std::size_t>(x)] != 0)
                throw PreconditionError("Z and X overlap at vertex " + std::to_string(x));
            side[static_cast<std::size_t>(x)] = tag;
        }
    };
    place_side(Z, 1, "Z");
    place_side(X, 2, "X");
    for (Vertex x = 1; x <= n; ++x)
        if (side[static_cast<std::size_t>(x)] == 0)
            throw PreconditionError("Z and X do not cover vertex " + std::to_string(x));

    const SparsenessWitness sw = sparseness(H);
    const int s = sw.s;
    const int vh = H.n();
    if (static_cast<int>(Z.size()) < vh)
        throw PreconditionError("|Z| = " + std::to_string(Z.size()) +
                                " is smaller than |V(H)| = " + std::to_string(vh));

    auto x_count = [&](const Edge& e) {
        int c = 0;
        for (Vertex u : e)
            if (side[static_cast<std::size_t>(u)] == 2) ++c;
        return c;
    };

    // Missing edges partitioned by |e cap X|; anything meeting X in fewer than
    // s vertices must already be present.
    std::vector<EdgeList> by_xc(static_cast<std::size_t>(r) + 1);
    for (Edge& e : F.missing_edges()) {
        const int xc = x_count(e);
        if (xc <= s - 1)
            throw PreconditionError("edge " + edge_str(e) + " with |e cap X| = " +
                                    std::to_string(xc) + " <= s-1 is missing from F");
        by_xc[static_cast<std::size_t>(xc)].push_back(std::move(e));
    }

    const std::vector<Vertex>& S = sw.subset;
    const Edge& U = sw.unique_edge;
    std::vector<Vertex> u_minus_s;
    std::set_difference(U.begin(), U.end(), S.begin(), S.end(), std::back_inserter(u_minus_s));
    std::vector<Vertex> h_rest;  // V(H) \ U, ascending
    for (Vertex h = 1; h <= vh; ++h)
        if (!std::binary_search(U.begin(), U.end(), h)) h_rest.push_back(h);

    EdgeSet state(F);
    LayeredSchedule sched;
    for (int j = s - 1; j <= r - 1; ++j) {
        LayeredSchedule::Layer layer{j + 1, {}};
        for (const Edge& e : by_xc[static_cast<std::size_t>(j) + 1]) {
            std::vector<Vertex> ex;  // e cap X, ascending
            for (Vertex u : e)
                if (side[static_cast<std::size_t>(u)] == 2) ex.push_back(u);
            std::vector<Vertex> image(static_cast<std::size_t>(vh), 0);
            for (int i = 0; i < s; ++i)
                image[static_cast<std::size_t>(S[static_cast<std::size_t>(i)] - 1)] =
                    ex[static_cast<std::size_t>(i)];
            std::vector<Vertex> rest;  // e minus the first s of e cap X, ascending
            for (Vertex u : e)
                if (std::find(ex.begin(), ex.begin() + s, u) == ex.begin() + s) rest.push_back(u);
            for (std::size_t i = 0; i < u_minus_s.size(); ++i)
                image[static_cast<std::size_t>(u_minus_s[i] - 1)] = rest[i];
            std::vector<Vertex> z_free;  // Z \ e, ascending, first |V(H)| - r
            for (Vertex z : Z) {
                if (z_free.size() == h_rest.size()) break;
                if (!std::binary_search(e.begin(), e.end(), z)) z_free.push_back(z);
            }
            if (z_free.size() < h_rest.size())
                throw Error("internal: only " + std::to_string(z_free.size()) +
                            " vertices of Z avoid " + edge_str(e) + "; need " +
                            std::to_string(h_rest.size()));
            for (std::size_t i = 0; i < h_rest.size(); ++i)
                image[static_cast<std::size_t>(h_rest[i] - 1)] = z_free[i];

            Embedding f{std::move(image)};
            if (f.map_edge(U) != e)
                throw Error("internal: witness does not map U onto " + edge_str(e));
            for (const Edge& he : H.edges()) {
                if (he == U) continue;
                const Edge im = f.map_edge(he);
                if (x_count(im) > j)
                    throw Error("internal: layering violated: " + edge_str(im) + " meets X in " +
                                std::to_string(x_count(im)) + " > " + std::to_string(j) +
                                " vertices at layer " + std::to_string(j + 1));
                if (!state.contains(im))
                    throw Error("internal: witness edge " + edge_str(im) +
                                " absent when scheduling " + edge_str(e));
            }
            layer.steps.push_back(PercolationStep{e, std::move(f), U});
            state.insert(e);
        }
        sched.layers.push_back(std::move(layer));
    }
    return sched;
}

PercolationCertificate full_certificate(const ConstructionResult& c, const Hypergraph& H) {
    const int n = c.F.n();
    const int r = c.F.r();
    const ClosureResult seed_closure = closure(c.F0, H);
    if (seed_closure.certificate.final_claim != FinalClaim::Complete)
        throw InvalidSeedError("seed F0 does not percolate to the complete hypergraph");

    LayeredSchedule sched;
    EdgeSet state(c.F);
    EdgeList added = c.F.edges();
    for (const std::vector<Vertex>& place : c.placements) {
        std::vector<PercolationStep> block_steps;
        for (const PercolationStep& st : seed_closure.certificate.steps) {
            Edge e = map_through(place, st.edge);
            if (state.contains(e)) continue;  // sound: edges only accumulate
            std::vector<Vertex> image(st.f.image.size());
            for (std::size_t i = 0; i < image.size(); ++i)
                image[i] = place[static_cast<std::size_t>(st.f.image[i] - 1)];
            state.insert(e);
            added.push_back(e);
            block_steps.push_back(PercolationStep{std::move(e), Embedding{std::move(image)},
                                                  st.designated});
        }
        sched.block_completions.push_back(std::move(block_steps));
    }

    const Hypergraph after_blocks(n, r, std::move(added));
    for (const Edge& e : after_blocks.missing_edges()) {
        int xc = 0;
        for (Vertex u : e)
            if (u > static_cast<Vertex>(c.Z.size())) ++xc;
        if (xc <= c.s - 1)
            throw Error("internal: edge " + edge_str(e) + " with |e cap X| = " +
                        std::to_string(xc) +
                        " <= s-1 still missing after block completion (cover or placement bug)");
    }

    sched.layers = claim_schedule(after_blocks, c.Z, c.X, H).layers;
    PercolationCertificate cert{c.F, sched.flatten(), FinalClaim::Complete};
    const VerifyResult check = verify_certificate(cert, H);
    if (!check.ok)
        throw Error("internal: generated certificate rejected" +
                    (check.failed_step ? " at step " + std::to_string(*check.failed_step) : "") +
                    ": " + check.reason);
    return cert;
}

}  // namespace wsat
