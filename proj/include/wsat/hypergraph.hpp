#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "wsat/errors.hpp"

namespace wsat {

using Vertex = int;                // 1-based vertex label
using Edge = std::vector<Vertex>;  // strictly increasing, size r
using EdgeList = std::vector<Edge>;

// Membership index flavour. Auto resolves to Bitset64 when n <= 64, which
// keys edges by a 64-bit vertex mask; Generic binary-searches the sorted edge
// list and works for any n. Both are required to behave identically.
enum class EdgeEncoding { Auto, Bitset64, Generic };

std::uint64_t edge_mask(const Edge& e);  // requires all vertices <= 64

// An r-uniform hypergraph on vertices [1..n]. Immutable after construction;
// growth happens through with_edge, which returns a new value.
class Hypergraph {
public:
    // Canonicalizes the edges (sorts within and across, removes duplicates)
    // and validates arity and vertex range.
    Hypergraph(int n, int r, EdgeList edges, EdgeEncoding enc = EdgeEncoding::Auto);

    // K^r_n, all C(n,r) edges.
    static Hypergraph complete(int n, int r, EdgeEncoding enc = EdgeEncoding::Auto);

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    const EdgeList& edges() const noexcept { return edges_; }  // lexicographic
    std::size_t edge_count() const noexcept { return edges_.size(); }
    EdgeEncoding encoding() const noexcept { return enc_; }  // resolved, never Auto

    bool has_edge(const Edge& e) const;
    bool is_complete() const;

    Hypergraph with_edge(const Edge& e) const;  // copy-and-add (no-op if present)

    // The r-subsets of [1..n] not present, in lexicographic order.
    EdgeList missing_edges() const;

    // Edge-set equality (n, r, edges); ignores the encoding.
    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_;
    }

private:
    struct canonical_tag {};
    Hypergraph(canonical_tag, int n, int r, EdgeList edges, EdgeEncoding enc);
    void build_index();

    int n_;
    int r_;
    EdgeList edges_;
    EdgeEncoding enc_;
    std::unordered_set<std::uint64_t> mask_index_;  // Bitset64 only
};

// Growable edge-membership set for replay loops, seeded from a hypergraph's
// edges; mask-keyed when n <= 64, ordered-set fallback otherwise.
class EdgeSet {
public:
    explicit EdgeSet(const Hypergraph& F);
    bool contains(const Edge& e) const {
        return use_masks_ ? masks_.count(edge_mask(e)) > 0 : general_.count(e) > 0;
    }
    void insert(const Edge& e) {
        if (use_masks_)
            masks_.insert(edge_mask(e));
        else
            general_.insert(e);
    }
    std::uint64_t size() const noexcept {
        return use_masks_ ? masks_.size() : general_.size();
    }

private:
    bool use_masks_;
    std::unordered_set<std::uint64_t> masks_;
    std::set<Edge> general_;
};

// Text format: first line "n r"; one edge per line as r whitespace-separated
// vertex labels; blank lines and lines starting with '#' are ignored.
Hypergraph parse_hypergraph(const std::string& text, EdgeEncoding enc = EdgeEncoding::Auto);

// Canonical form: header, then edges sorted lexicographically, vertices ascending.
std::string serialize_hypergraph(const Hypergraph& F);

// Checks that `e` is a strictly increasing r-subset of [1..n]; throws
// InvalidParametersError naming `what` otherwise.
void validate_edge(const Edge& e, int n, int r, const char* what);

}  // namespace wsat
