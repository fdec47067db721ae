#include "wsat/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wsat/combinatorics.hpp"

namespace wsat {

namespace {

void validate_cover_params(int size_x, int k, int t) {
    if (size_x < 0 || t < 0 || t > k || k > size_x)
        throw InvalidParametersError("cover parameters must satisfy 0 <= t <= k <= |X|; got |X|=" +
                                     std::to_string(size_x) + " k=" + std::to_string(k) +
                                     " t=" + std::to_string(t));
}

double rodl_bound_value(int size_x, int k, int t, double delta) {
    return (1.0 + delta) * static_cast<double>(binomial(size_x, t)) /
           static_cast<double>(binomial(k, t));
}

std::vector<Vertex> iota_ground(int size_x) {
    std::vector<Vertex> g(static_cast<std::size_t>(size_x));
    for (int i = 0; i < size_x; ++i) g[static_cast<std::size_t>(i)] = i + 1;
    return g;
}

// Membership set for t-subsets; masks when the ground set fits in 64 bits.
class SubsetSet {
public:
    explicit SubsetSet(bool use_masks) : use_masks_(use_masks) {}
    bool contains(const std::vector<Vertex>& s) const {
        return use_masks_ ? masks_.count(edge_mask(s)) > 0 : general_.count(s) > 0;
    }
    void insert(const std::vector<Vertex>& s) {
        if (use_masks_)
            masks_.insert(edge_mask(s));
        else
            general_.insert(s);
    }
    std::uint64_t size() const { return use_masks_ ? masks_.size() : general_.size(); }

private:
    bool use_masks_;
    std::unordered_set<std::uint64_t> masks_;
    std::set<std::vector<Vertex>> general_;
};

}  // namespace

std::uint64_t cover_lower_bound(int size_x, int k, int t) {
    validate_cover_params(size_x, k, t);
    const std::uint64_t num = binomial(size_x, t);
    const std::uint64_t den = binomial(k, t);
    return (num + den - 1) / den;
}

CoverFamily greedy_cover(int size_x, int k, int t, double delta) {
    validate_cover_params(size_x, k, t);
    CoverFamily out;
    out.ground_set = iota_ground(size_x);
    out.k = k;
    out.t = t;
    out.delta = delta;
    out.rodl_bound = rodl_bound_value(size_x, k, t, delta);

    if (t == 0) {
        // Any single block contains the empty set; emit the lexicographically first.
        std::vector<Vertex> first(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = i + 1;
        out.blocks.push_back(std::move(first));
        return out;
    }

    const std::uint64_t total = binomial(size_x, t);
    // index patterns of the t-subsets within one k-block, computed once
    std::vector<std::vector<int>> patterns;
    for_each_combination(k, t, [&](const std::vector<int>& c) {
        patterns.push_back(c);
        return true;
    });

    SubsetSet covered(size_x <= 64);
    std::vector<Vertex> block(static_cast<std::size_t>(k)), best_block;
    std::vector<Vertex> tsub(static_cast<std::size_t>(t));
    while (covered.size() < total) {
        std::uint64_t best_cnt = 0;
        for_each_combination(size_x, k, [&](const std::vector<int>& c) {
            for (int i = 0; i < k; ++i) block[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + 1;
            std::uint64_t cnt = 0;
            for (const std::vector<int>& pat : patterns) {
                for (int i = 0; i < t; ++i) tsub[static_cast<std::size_t>(i)] = block[static_cast<std::size_t>(pat[static_cast<std::size_t>(i)])];
                if (!covered.contains(tsub)) ++cnt;
            }
            if (cnt > best_cnt) {  // strict: keeps the lex-first block among ties
                best_cnt = cnt;
                best_block = block;
            }
            return true;
        });
        if (best_cnt == 0) throw Error("internal: greedy cover made no progress");
        for (const std::vector<int>& pat : patterns) {
            for (int i = 0; i < t; ++i) tsub[static_cast<std::size_t>(i)] = best_block[static_cast<std::size_t>(pat[static_cast<std::size_t>(i)])];
            if (!covered.contains(tsub)) covered.insert(tsub);
        }
        out.blocks.push_back(best_block);
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    if (out.blocks.size() < cover_lower_bound(size_x, k, t))
        throw Error("internal: cover below the counting lower bound");
    return out;
}

namespace {

struct ExactCoverSearch {
    const std::vector<std::vector<int>>& block_covers;   // block id -> t-subset indices
    const std::vector<std::vector<int>>& containing;     // t-subset index -> block ids
    std::uint64_t per_block;                             // C(k,t)
    std::size_t total;

    std::vector<char> covered;
    std::size_t covered_count = 0;
    std::vector<int> chosen;
    std::vector<int> best;

    void run() {
        covered.assign(total, 0);
        dfs(0);
    }

    void dfs(std::size_t scan_from) {
        if (covered_count == total) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        const std::uint64_t remaining = total - covered_count;
        const std::uint64_t bound = chosen.size() + (remaining + per_block - 1) / per_block;
        if (bound >= best.size()) return;
        std::size_t u = scan_from;
        while (covered[u]) ++u;
        for (int b : containing[u]) {
            std::vector<int> newly;
            for (int ti : block_covers[static_cast<std::size_t>(b)]) {
                if (!covered[static_cast<std::size_t>(ti)]) {
                    covered[static_cast<std::size_t>(ti)] = 1;
                    newly.push_back(ti);
                }
            }
            covered_count += newly.size();
            chosen.push_back(b);
            dfs(u);
            chosen.pop_back();
            covered_count -= newly.size();
            for (int ti : newly) covered[static_cast<std::size_t>(ti)] = 0;
        }
    }
};

}  // namespace

CoverFamily exact_min_cover(int size_x, int k, int t, double delta) {
    validate_cover_params(size_x, k, t);
    if (binomial_capped(size_x, t, 10'001) > 10'000 || binomial_capped(size_x, k, 100'001) > 100'000)
        throw SizeGuardError("instance too large for exact search (need C(|X|,t) <= 10^4 and "
                             "C(|X|,k) <= 10^5); use greedy_cover");

    CoverFamily greedy = greedy_cover(size_x, k, t, delta);
    if (t == 0) return greedy;  // one block is always optimal

    // t-subset index space
    std::vector<std::vector<Vertex>> tsubs;
    std::map<std::vector<Vertex>, int> tsub_id;
    for_each_combination(size_x, t, [&](const std::vector<int>& c) {
        std::vector<Vertex> s(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) s[i] = c[i] + 1;
        tsub_id.emplace(s, static_cast<int>(tsubs.size()));
        tsubs.push_back(std::move(s));
        return true;
    });

    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::vector<int>> block_covers;
    std::vector<std::vector<int>> containing(tsubs.size());
    std::map<std::vector<Vertex>, int> block_id;
    for_each_combination(size_x, k, [&](const std::vector<int>& c) {
        std::vector<Vertex> b(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) b[i] = c[i] + 1;
        const int id = static_cast<int>(blocks.size());
        std::vector<int> covers;
        for_each_combination(k, t, [&](const std::vector<int>& pat) {
            std::vector<Vertex> s(pat.size());
            for (std::size_t i = 0; i < pat.size(); ++i) s[i] = b[static_cast<std::size_t>(pat[i])];
            const int ti = tsub_id.at(s);
            covers.push_back(ti);
            containing[static_cast<std::size_t>(ti)].push_back(id);
            return true;
        });
        block_id.emplace(b, id);
        blocks.push_back(std::move(b));
        block_covers.push_back(std::move(covers));
        return true;
    });

    ExactCoverSearch search{block_covers, containing, binomial(k, t), tsubs.size(), {}, 0, {}, {}};
    for (const std::vector<Vertex>& b : greedy.blocks) search.best.push_back(block_id.at(b));
    search.run();

    CoverFamily out = greedy;
    out.blocks.clear();
    for (int b : search.best) out.blocks.push_back(blocks[static_cast<std::size_t>(b)]);
    std::sort(out.blocks.begin(), out.blocks.end());
    if (out.blocks.size() < cover_lower_bound(size_x, k, t))
        throw Error("internal: cover below the counting lower bound");
    return out;
}

CoverCheck verify_cover(const CoverFamily& c) {
    const int size_x = static_cast<int>(c.ground_set.size());
    if (c.t < 0 || c.t > c.k || c.k > size_x)
        return CoverCheck{false, std::nullopt, "parameters violate 0 <= t <= k <= |X|"};
    for (std::size_t i = 0; i < c.ground_set.size(); ++i)
        if (i > 0 && c.ground_set[i] <= c.ground_set[i - 1])
            return CoverCheck{false, std::nullopt, "ground set not strictly increasing"};
    if (c.blocks.empty())
        return CoverCheck{false, std::nullopt, "cover has no blocks"};
    for (const std::vector<Vertex>& b : c.blocks) {
        if (static_cast<int>(b.size()) != c.k)
            return CoverCheck{false, std::nullopt, "block has wrong size"};
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!std::binary_search(c.ground_set.begin(), c.ground_set.end(), b[i]))
                return CoverCheck{false, std::nullopt, "block element outside the ground set"};
            if (i > 0 && b[i] <= b[i - 1])
                return CoverCheck{false, std::nullopt, "block not strictly increasing"};
        }
    }
    CoverCheck result{true, std::nullopt, ""};
    for_each_combination(size_x, c.t, [&](const std::vector<int>& idx) {
        std::vector<Vertex> sub(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = c.ground_set[static_cast<std::size_t>(idx[i])];
        for (const std::vector<Vertex>& b : c.blocks)
            if (std::includes(b.begin(), b.end(), sub.begin(), sub.end())) return true;
        result = CoverCheck{false, std::move(sub), "t-subset not covered by any block"};
        return false;
    });
    return result;
}

CoverFamily relabel_cover(const CoverFamily& c, const std::vector<Vertex>& target_ground) {
    if (target_ground.size() != c.ground_set.size())
        throw InvalidParametersError("relabel target has wrong size");
    for (std::size_t i = 0; i < target_ground.size(); ++i)
        if (i > 0 && target_ground[i] <= target_ground[i - 1])
            throw InvalidParametersError("relabel target not strictly increasing");
    CoverFamily out = c;
    out.ground_set = target_ground;
    for (auto& b : out.blocks) {
        for (auto& x : b) {
            const auto it = std::lower_bound(c.ground_set.begin(), c.ground_set.end(), x);
            if (it == c.ground_set.end() || *it != x)
                throw InvalidParametersError("block element outside the cover's ground set");
            x = target_ground[static_cast<std::size_t>(it - c.ground_set.begin())];
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

}  // namespace wsat
