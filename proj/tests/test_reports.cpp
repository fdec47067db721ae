#include "doctest.h"
#include "fixtures.hpp"
#include "wsat/errors.hpp"
#include "wsat/reports.hpp"

using namespace wsat;

TEST_CASE("triangle ratio rows, exact range") {
    std::vector<RatioRow> rows = ratio_table(fixtures::k3(), 4, 8, 4);
    REQUIRE(rows.size() == 5);
    const std::uint64_t values[] = {3, 4, 5, 6, 7};
    const double ratios[] = {3.0, 2.0, 5.0 / 3.0, 1.5, 1.4};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].n == static_cast<int>(i) + 4);
        CHECK(rows[i].wsat_value == values[i]);
        CHECK(rows[i].denom == i + 1);  // C(n-2, 1)
        CHECK(rows[i].ratio == doctest::Approx(ratios[i]));
    }
    // the switchover away from exact happens once the predictor overruns
    CHECK(rows[0].method == WsatMethod::Exact);
    CHECK(rows[3].method == WsatMethod::Exact);
    CHECK(rows[4].method == WsatMethod::UpperBoundConstruction);
}

TEST_CASE("csv and plot formats") {
    std::vector<RatioRow> rows = ratio_table(fixtures::k3(), 4, 6, 4);
    CHECK(ratio_table_csv(rows) ==
          "n,wsat_value,method,denom,ratio\n"
          "4,3,exact,1,3.000000\n"
          "5,4,exact,2,2.000000\n"
          "6,5,exact,3,1.666667\n");
    CHECK(ratio_table_plot(rows) ==
          "n,ratio\n"
          "4,3.000000\n"
          "5,2.000000\n"
          "6,1.666667\n");
}

TEST_CASE("flat family keeps a constant value") {
    std::vector<RatioRow> rows = ratio_table(fixtures::h124(), 5, 8, 4);
    REQUIRE(rows.size() == 4);
    for (const RatioRow& row : rows) {
        CHECK(row.wsat_value == 1);
        CHECK(row.denom == 1);  // s = 1, so C(n-4, 0)
        CHECK(row.ratio == doctest::Approx(1.0));
    }
}

TEST_CASE("ratio_table input checks") {
    CHECK_THROWS_AS(ratio_table(fixtures::k3(), 6, 5, 4), InvalidParametersError);  // from > to
    CHECK_THROWS_AS(ratio_table(fixtures::k3(), 3, 6, 4), InvalidParametersError);  // from < v+s-1
    CHECK_THROWS_AS(ratio_table(Hypergraph(3, 3, {{1, 2, 3}}), 4, 6, 3), PreconditionError);
}

TEST_CASE("exact rows agree with direct searches") {
    std::vector<RatioRow> rows = ratio_table(fixtures::k4(), 5, 6, 5);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].wsat_value == wsat_exact(5, fixtures::k4()).value);
    CHECK(rows[0].denom == 1);
    CHECK(rows[1].wsat_value == wsat_exact(6, fixtures::k4()).value);
}
