#include "wsat/reports.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "wsat/amalgamation.hpp"
#include "wsat/combinatorics.hpp"
#include "wsat/sparseness.hpp"

namespace wsat {

namespace {

// Worst-case saturation checks for the deepening search up to level `max_k`,
// clamped once it exceeds the budget.
std::uint64_t predicted_checks(std::uint64_t num_edges, std::uint64_t max_k,
                               std::uint64_t budget) {
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        total += binomial_capped(static_cast<int>(num_edges), static_cast<int>(k), budget + 1);
        if (total > budget) return budget + 1;
    }
    return total;
}

}  // namespace

std::vector<RatioRow> ratio_table(const Hypergraph& H, int from, int to, int m,
                                  const SearchOptions& opts) {
    const ConjecturePreconditions pre = check_conjecture_preconditions(H);
    const int v = pre.v;
    const int s = pre.s;
    if (from > to)
        throw InvalidParametersError("empty range: from=" + std::to_string(from) +
                                     " > to=" + std::to_string(to));
    if (from < v + s - 1)
        throw InvalidParametersError("range must start at n >= v + s - 1 = " +
                                     std::to_string(v + s - 1) +
                                     " so that C(n-v, s-1) is positive");

    std::optional<Hypergraph> seed;  // exact minimizer at m, computed on demand
    auto seed_hypergraph = [&]() -> const Hypergraph& {
        if (!seed) {
            WsatResult res = wsat_exact(m, H, opts);
            if (res.method != WsatMethod::Exact)
                throw PreconditionError("exact seed search at m=" + std::to_string(m) +
                                        " exceeded its budget; choose a smaller m");
            seed = std::move(res.minimizer);
        }
        return *seed;
    };

    std::vector<RatioRow> rows;
    for (int n = from; n <= to; ++n) {
        std::uint64_t value = 0;
        WsatMethod method = WsatMethod::Exact;
        bool use_exact = true;
        if (n >= m) {
            // predict the exact search's cost from the construction value
            const std::uint64_t upper =
                construct(H, seed_hypergraph(), n, /*trust_seed=*/true).F.edge_count();
            const std::uint64_t num_edges = binomial(n, H.r());
            use_exact = predicted_checks(num_edges, std::min(upper, num_edges), opts.budget) <=
                        opts.budget;
        }
        if (use_exact) {
            WsatResult res = wsat_exact(n, H, opts);
            value = res.value;
            method = res.method;
        } else {
            WsatResult res = wsat_upper(n, H, m, opts);
            value = res.value;
            method = res.method;
        }
        const std::uint64_t denom = binomial(n - v, s - 1);
        rows.push_back(RatioRow{n, value, method, denom,
                                static_cast<double>(value) / static_cast<double>(denom)});
    }
    return rows;
}

std::string ratio_table_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "n,wsat_value,method,denom,ratio\n";
    out << std::fixed << std::setprecision(6);
    for (const RatioRow& row : rows)
        out << row.n << ',' << row.wsat_value << ',' << method_name(row.method) << ','
            << row.denom << ',' << row.ratio << '\n';
    return out.str();
}

std::string ratio_table_plot(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "n,ratio\n";
    out << std::fixed << std::setprecision(6);
    for (const RatioRow& row : rows) out << row.n << ',' << row.ratio << '\n';
    return out.str();
}

}  // namespace wsat
