#include "wsat/combinatorics.hpp"

#include <limits>

namespace wsat {

namespace {

// Multiplies r by (n-k+i) and divides by i, step by step; each intermediate
// result is an exact binomial, so overflow checking the product suffices.
template <typename OnOverflow>
std::uint64_t binomial_impl(int n, int k, OnOverflow&& on_overflow) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const auto factor = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / factor) {
            // Exact value of r*factor may still fit after /i; use 128-bit to be sure.
            const unsigned __int128 wide = static_cast<unsigned __int128>(r) * factor / static_cast<std::uint64_t>(i);
            if (wide > std::numeric_limits<std::uint64_t>::max()) return on_overflow();
            r = static_cast<std::uint64_t>(wide);
        } else {
            r = r * factor / static_cast<std::uint64_t>(i);
        }
    }
    return r;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    return binomial_impl(n, k, []() -> std::uint64_t {
        throw InvalidParametersError("binomial coefficient overflows 64 bits");
    });
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    bool overflowed = false;
    const std::uint64_t v = binomial_impl(n, k, [&]() {
        overflowed = true;
        return std::uint64_t{0};
    });
    if (overflowed || v > cap) return cap;
    return v;
}

}  // namespace wsat
