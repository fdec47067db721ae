#pragma once

#include <cstdint>
#include <vector>

#include "wsat/errors.hpp"

namespace wsat {

// Exact C(n, k). Throws InvalidParametersError if the value overflows uint64.
std::uint64_t binomial(int n, int k);

// C(n, k) clamped to `cap` instead of throwing; monotone in intermediate steps.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

// Visits every k-subset of {0, ..., n-1} in lexicographic order. The callback
// receives the subset as a strictly increasing index vector and returns false
// to stop early. Returns true iff the enumeration ran to completion.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
    if (k < 0 || k > n) return true;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (!visit(static_cast<const std::vector<int>&>(c))) return false;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace wsat
