#include "wsat/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "wsat/combinatorics.hpp"

namespace wsat {

namespace {
constexpr std::uint64_t kMaxCompleteEdges = 5'000'000;
}

std::uint64_t edge_mask(const Edge& e) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << (v - 1);
    return m;
}

void validate_edge(const Edge& e, int n, int r, const char* what) {
    if (static_cast<int>(e.size()) != r)
        throw InvalidParametersError(std::string(what) + ": expected " + std::to_string(r) +
                                     " vertices, got " + std::to_string(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n)
            throw InvalidParametersError(std::string(what) + ": vertex " + std::to_string(e[i]) +
                                         " out of range [1.." + std::to_string(n) + "]");
        if (i > 0 && e[i] <= e[i - 1])
            throw InvalidParametersError(std::string(what) + ": vertices not strictly increasing");
    }
}

Hypergraph::Hypergraph(int n, int r, EdgeList edges, EdgeEncoding enc)
    : n_(n), r_(r), edges_(std::move(edges)), enc_(enc) {
    if (n_ < 1) throw InvalidParametersError("vertex count must be positive");
    if (r_ < 1 || r_ > n_)
        throw InvalidParametersError("uniformity r=" + std::to_string(r_) +
                                     " outside [1..n], n=" + std::to_string(n_));
    for (Edge& e : edges_) {
        std::sort(e.begin(), e.end());
        validate_edge(e, n_, r_, "edge");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_index();
}

Hypergraph::Hypergraph(canonical_tag, int n, int r, EdgeList edges, EdgeEncoding enc)
    : n_(n), r_(r), edges_(std::move(edges)), enc_(enc) {
    build_index();
}

void Hypergraph::build_index() {
    if (enc_ == EdgeEncoding::Auto)
        enc_ = n_ <= 64 ? EdgeEncoding::Bitset64 : EdgeEncoding::Generic;
    if (enc_ == EdgeEncoding::Bitset64) {
        if (n_ > 64)
            throw InvalidParametersError("Bitset64 encoding requires n <= 64");
        mask_index_.clear();
        mask_index_.reserve(edges_.size() * 2);
        for (const Edge& e : edges_) mask_index_.insert(edge_mask(e));
    }
}

Hypergraph Hypergraph::complete(int n, int r, EdgeEncoding enc) {
    if (n < 1 || r < 1 || r > n)
        throw InvalidParametersError("complete(" + std::to_string(n) + ", " + std::to_string(r) +
                                     "): need 1 <= r <= n");
    const std::uint64_t count = binomial(n, r);
    if (count > kMaxCompleteEdges)
        throw InvalidParametersError("complete hypergraph would have " + std::to_string(count) +
                                     " edges; limit is " + std::to_string(kMaxCompleteEdges));
    EdgeList edges;
    edges.reserve(count);
    for_each_combination(n, r, [&](const std::vector<int>& c) {
        Edge e(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) e[i] = c[i] + 1;
        edges.push_back(std::move(e));
        return true;
    });
    return Hypergraph(canonical_tag{}, n, r, std::move(edges), enc);
}

bool Hypergraph::has_edge(const Edge& e) const {
    if (enc_ == EdgeEncoding::Bitset64) return mask_index_.count(edge_mask(e)) > 0;
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Hypergraph::is_complete() const {
    return edges_.size() == binomial(n_, r_);
}

Hypergraph Hypergraph::with_edge(const Edge& e) const {
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    validate_edge(sorted, n_, r_, "with_edge");
    Hypergraph out = *this;
    auto it = std::lower_bound(out.edges_.begin(), out.edges_.end(), sorted);
    if (it != out.edges_.end() && *it == sorted) return out;
    if (out.enc_ == EdgeEncoding::Bitset64) out.mask_index_.insert(edge_mask(sorted));
    out.edges_.insert(it, std::move(sorted));
    return out;
}

EdgeSet::EdgeSet(const Hypergraph& F) : use_masks_(F.n() <= 64) {
    for (const Edge& e : F.edges()) insert(e);
}

EdgeList Hypergraph::missing_edges() const {
    EdgeList out;
    for_each_combination(n_, r_, [&](const std::vector<int>& c) {
        Edge e(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) e[i] = c[i] + 1;
        if (!has_edge(e)) out.push_back(std::move(e));
        return true;
    });
    return out;
}

Hypergraph parse_hypergraph(const std::string& text, EdgeEncoding enc) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, r = -1;
    EdgeList edges;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments, then whitespace-only lines
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<long long> vals;
        long long x;
        while (tokens >> x) vals.push_back(x);
        if (!tokens.eof())
            throw ParseError(lineno, "non-integer token");
        if (vals.empty()) continue;
        if (n < 0) {
            if (vals.size() != 2) throw ParseError(lineno, "header must be 'n r'");
            if (vals[0] < 1 || vals[0] > 1'000'000)
                throw ParseError(lineno, "vertex count out of range");
            if (vals[1] < 1 || vals[1] > vals[0])
                throw ParseError(lineno, "uniformity must satisfy 1 <= r <= n");
            n = static_cast<int>(vals[0]);
            r = static_cast<int>(vals[1]);
            continue;
        }
        if (static_cast<int>(vals.size()) != r)
            throw ParseError(lineno, "edge has " + std::to_string(vals.size()) +
                                         " vertices, expected " + std::to_string(r));
        Edge e;
        e.reserve(vals.size());
        for (long long v : vals) {
            if (v < 1 || v > n)
                throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range [1.." +
                                             std::to_string(n) + "]");
            e.push_back(static_cast<Vertex>(v));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ParseError(lineno, "repeated vertex within edge");
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(std::move(e));
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n r'");
    return Hypergraph(n, r, std::move(edges), enc);
}

std::string serialize_hypergraph(const Hypergraph& F) {
    std::ostringstream out;
    out << F.n() << ' ' << F.r() << '\n';
    for (const Edge& e : F.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace wsat
