#include <vector>

#include "doctest.h"
#include "wsat/combinatorics.hpp"
#include "wsat/errors.hpp"

using namespace wsat;

TEST_CASE("binomial small values") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(10, 2) == 45);
    CHECK(binomial(40, 2) == 780);
    CHECK(binomial(64, 32) == 1832624140942590534ull);
}

TEST_CASE("binomial out-of-range and overflow") {
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -2) == 0);
    CHECK_THROWS_AS(binomial(68, 34), InvalidParametersError);
}

TEST_CASE("binomial_capped saturates instead of overflowing") {
    CHECK(binomial_capped(6, 3, 1000) == 20);
    CHECK(binomial_capped(6, 3, 10) == 10);
    CHECK(binomial_capped(68, 34, 500) == 500);
}

TEST_CASE("for_each_combination lexicographic order") {
    std::vector<std::vector<int>> seen;
    bool done = for_each_combination(4, 2, [&](const std::vector<int>& c) {
        seen.push_back(c);
        return true;
    });
    CHECK(done);
    std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == want);
}

TEST_CASE("for_each_combination edge cases") {
    int calls = 0;
    CHECK(for_each_combination(3, 0, [&](const std::vector<int>& c) {
        ++calls;
        CHECK(c.empty());
        return true;
    }));
    CHECK(calls == 1);

    calls = 0;
    CHECK(for_each_combination(2, 3, [&](const std::vector<int>&) {
        ++calls;
        return true;
    }));
    CHECK(calls == 0);
}

TEST_CASE("for_each_combination early stop") {
    int calls = 0;
    bool done = for_each_combination(5, 2, [&](const std::vector<int>&) {
        ++calls;
        return calls < 3;
    });
    CHECK_FALSE(done);
    CHECK(calls == 3);
}
