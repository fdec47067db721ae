#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wsat/combinatorics.hpp"
#include "wsat/covering.hpp"
#include "wsat/errors.hpp"

using namespace wsat;

using Blocks = std::vector<std::vector<Vertex>>;

TEST_CASE("greedy cover splits a partitionable instance") {
    CoverFamily c = greedy_cover(6, 3, 1);
    CHECK(c.blocks == Blocks{{1, 2, 3}, {4, 5, 6}});
    CHECK(verify_cover(c).ok);
    CHECK(c.ground_set == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("greedy cover hits the Steiner bound on (7,3,2)") {
    CoverFamily c = greedy_cover(7, 3, 2);
    CHECK(c.blocks.size() == 7);
    CHECK(verify_cover(c).ok);
    CHECK(c.blocks == Blocks{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7},
                             {3, 5, 6}});
}

TEST_CASE("single block instances") {
    CoverFamily c = greedy_cover(5, 5, 2);
    CHECK(c.blocks == Blocks{{1, 2, 3, 4, 5}});
    CHECK(verify_cover(c).ok);

    // t = 0: one lexicographically first block
    c = greedy_cover(5, 3, 0);
    CHECK(c.blocks == Blocks{{1, 2, 3}});
    CHECK(verify_cover(c).ok);
    CHECK(exact_min_cover(5, 3, 0).blocks == Blocks{{1, 2, 3}});
}

TEST_CASE("exact covers reach the known optima") {
    CoverFamily fano = exact_min_cover(7, 3, 2);
    CHECK(fano.blocks.size() == 7);
    CHECK(verify_cover(fano).ok);
    CHECK(cover_lower_bound(7, 3, 2) == 7);

    CoverFamily c632 = exact_min_cover(6, 3, 2);
    CHECK(c632.blocks.size() == 6);
    CHECK(verify_cover(c632).ok);

    // k = t degenerates to all t-subsets
    CoverFamily all_pairs = exact_min_cover(4, 2, 2);
    CHECK(all_pairs.blocks.size() == 6);
    CHECK(verify_cover(all_pairs).ok);
}

TEST_CASE("exact matches the exhaustive oracle on small instances") {
    CHECK(exact_min_cover(5, 3, 2).blocks.size() == oracle::min_cover_size(5, 3, 2, 5));
    CHECK(exact_min_cover(6, 3, 2).blocks.size() == oracle::min_cover_size(6, 3, 2, 6));
    CHECK(exact_min_cover(6, 4, 2).blocks.size() == oracle::min_cover_size(6, 4, 2, 4));
    CHECK(exact_min_cover(7, 4, 1).blocks.size() == oracle::min_cover_size(7, 4, 1, 3));
}

TEST_CASE("rodl bound field") {
    CoverFamily c = greedy_cover(7, 3, 2, 0.5);
    CHECK(c.delta == doctest::Approx(0.5));
    CHECK(c.rodl_bound == doctest::Approx(1.5 * 21.0 / 3.0));
}

TEST_CASE("verify_cover finds the first gap") {
    CoverFamily c;
    c.ground_set = {1, 2, 3, 4};
    c.k = 3;
    c.t = 2;
    c.blocks = {{1, 2, 3}};
    c.delta = 0.0;
    c.rodl_bound = 2.0;
    CoverCheck chk = verify_cover(c);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.first_uncovered.has_value());
    CHECK(*chk.first_uncovered == std::vector<Vertex>{1, 4});

    c.blocks.push_back({1, 3, 4});
    chk = verify_cover(c);
    CHECK_FALSE(chk.ok);
    CHECK(*chk.first_uncovered == std::vector<Vertex>{2, 4});

    c.blocks.push_back({2, 3, 4});
    CHECK(verify_cover(c).ok);
}

TEST_CASE("verify_cover rejects malformed families") {
    CoverFamily c = greedy_cover(5, 3, 1);
    c.blocks.clear();
    CHECK_FALSE(verify_cover(c).ok);  // no blocks, extension property unusable

    c = greedy_cover(5, 3, 1);
    c.blocks[0] = {1, 2};  // wrong block size
    CHECK_FALSE(verify_cover(c).ok);

    c = greedy_cover(5, 3, 1);
    c.blocks[0] = {1, 2, 9};  // outside the ground set
    CHECK_FALSE(verify_cover(c).ok);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(greedy_cover(5, 6, 2), InvalidParametersError);   // k > |X|
    CHECK_THROWS_AS(greedy_cover(5, 3, 4), InvalidParametersError);   // t > k
    CHECK_THROWS_AS(greedy_cover(-1, 0, 0), InvalidParametersError);
    CHECK_THROWS_AS(greedy_cover(5, 3, -1), InvalidParametersError);
    CHECK_THROWS_AS(exact_min_cover(5, 3, 4), InvalidParametersError);

    // degenerate but legal: empty ground set, one empty block
    CoverFamily empty = greedy_cover(0, 0, 0);
    CHECK(empty.blocks == Blocks{{}});
    CHECK(verify_cover(empty).ok);
}

TEST_CASE("exact size guard") {
    CHECK_THROWS_AS(exact_min_cover(40, 5, 2), SizeGuardError);   // C(40,5) too large
    CHECK_THROWS_AS(exact_min_cover(200, 3, 2), SizeGuardError);  // C(200,2) too large
}

TEST_CASE("greedy grid: verified and above the lower bound") {
    for (int sx = 1; sx <= 12; ++sx) {
        for (int k = 1; k <= sx && k <= 5; ++k) {
            for (int t = 0; t <= k && t <= 3; ++t) {
                CoverFamily c = greedy_cover(sx, k, t);
                CAPTURE(sx);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(verify_cover(c).ok);
                CHECK(c.blocks.size() >= cover_lower_bound(sx, k, t));
            }
        }
    }
}

TEST_CASE("exact never beaten by greedy on a small grid") {
    for (int sx = 4; sx <= 8; ++sx) {
        for (int k = 2; k <= sx && k <= 4; ++k) {
            for (int t = 1; t <= k && t <= 2; ++t) {
                CoverFamily g = greedy_cover(sx, k, t);
                CoverFamily e = exact_min_cover(sx, k, t);
                CAPTURE(sx);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(verify_cover(e).ok);
                CHECK(e.blocks.size() <= g.blocks.size());
                CHECK(e.blocks.size() >= cover_lower_bound(sx, k, t));
            }
        }
    }
}

TEST_CASE("relabel_cover maps order-preservingly") {
    CoverFamily c = greedy_cover(4, 2, 1);
    CoverFamily r = relabel_cover(c, {10, 20, 30, 40});
    CHECK(r.ground_set == std::vector<Vertex>{10, 20, 30, 40});
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        REQUIRE(r.blocks[i].size() == c.blocks[i].size());
        for (std::size_t j = 0; j < c.blocks[i].size(); ++j)
            CHECK(r.blocks[i][j] == c.blocks[i][j] * 10);
    }
    CHECK(verify_cover(r).ok);
    CHECK_THROWS_AS(relabel_cover(c, {10, 20, 30}), InvalidParametersError);  // size mismatch
}
