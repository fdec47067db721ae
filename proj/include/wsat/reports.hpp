#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"
#include "wsat/search.hpp"

namespace wsat {

struct RatioRow {
    int n = 0;
    std::uint64_t wsat_value = 0;
    WsatMethod method = WsatMethod::Exact;
    std::uint64_t denom = 0;  // C(n - v, s - 1), the normalization of the limit
    double ratio = 0.0;       // wsat_value / denom
};

// One row per n in [from..to]. For each n the exact search runs when its
// worst-case cost, predicted from the construction upper bound at seed size m,
// fits the budget; otherwise the row carries the construction value. Rows at
// n < m (where no construction exists) always attempt the exact search.
// Requires from >= v + s - 1 so every denominator is positive.
std::vector<RatioRow> ratio_table(const Hypergraph& H, int from, int to, int m,
                                  const SearchOptions& opts = {});

// CSV: header "n,wsat_value,method,denom,ratio", ratios with six decimals.
std::string ratio_table_csv(const std::vector<RatioRow>& rows);

// Plot data as two-column CSV "n,ratio", same precision.
std::string ratio_table_plot(const std::vector<RatioRow>& rows);

}  // namespace wsat
