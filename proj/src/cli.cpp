#include "wsat/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"

#include "wsat/amalgamation.hpp"
#include "wsat/combinatorics.hpp"
#include "wsat/covering.hpp"
#include "wsat/json_io.hpp"
#include "wsat/percolation.hpp"
#include "wsat/reports.hpp"
#include "wsat/search.hpp"
#include "wsat/sparseness.hpp"

namespace wsat {

namespace {

std::string fmt_set(const std::vector<Vertex>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

Hypergraph load_hypergraph(const std::string& path) {
    try {
        return parse_hypergraph(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

struct CertArgs {
    std::string f_path, h_path, cert_path;
};

struct WsatMinArgs {
    int n = 0;
    std::string h_path, out_path;
    SearchOptions opts;
};

struct CoverArgs {
    int size_x = 0, k = 0, t = 0;
    bool exact = false;
    double delta = 0.0;
    std::string out_path;
};

struct ConstructArgs {
    std::string h_path, f0_path, out_path = "construction.json";
    int n = 0, m = 0;
    std::uint64_t budget = SearchOptions{}.budget;
};

struct RatioArgs {
    std::string h_path, plot_path = "ratio-plot.csv";
    int from = 0, to = 0, m = 0;
    std::uint64_t budget = SearchOptions{}.budget;
};

int cmd_sparseness(const std::string& h_path, std::ostream& out) {
    const Hypergraph H = load_hypergraph(h_path);
    const SparsenessWitness w = sparseness(H);
    out << "s(H) = " << w.s << "\n"
        << "S = " << fmt_set(w.subset) << "\n"
        << "U = " << fmt_set(w.unique_edge) << "\n";
    return 0;
}

int cmd_closure(const CertArgs& a, std::ostream& out) {
    const Hypergraph F = load_hypergraph(a.f_path);
    const Hypergraph H = load_hypergraph(a.h_path);
    const ClosureResult res = closure(F, H);
    const bool complete = res.certificate.final_claim == FinalClaim::Complete;
    out << "closure: " << res.fixed_point.edge_count() << " of " << binomial(F.n(), F.r())
        << " edges (" << (complete ? "complete" : "proper closure") << "), "
        << res.certificate.steps.size() << " steps\n";
    if (!a.cert_path.empty()) {
        write_json_file(a.cert_path, certificate_to_json(res.certificate));
        out << "certificate written to " << a.cert_path << "\n";
    }
    return 0;
}

int cmd_check_wsat(const CertArgs& a, std::ostream& out) {
    const Hypergraph F = load_hypergraph(a.f_path);
    const Hypergraph H = load_hypergraph(a.h_path);
    const SaturationResult res = is_weakly_saturated(F, H);
    if (!res.saturated) {
        out << "not weakly saturated: closure reaches "
            << res.certificate.initial.edge_count() + res.certificate.steps.size() << " of "
            << binomial(F.n(), F.r()) << " edges\n";
        return 1;
    }
    const std::string path = a.cert_path.empty() ? a.f_path + ".cert.json" : a.cert_path;
    write_json_file(path, certificate_to_json(res.certificate));
    out << path << "\n";
    return 0;
}

int cmd_wsat_min(const WsatMinArgs& a, std::ostream& out, std::ostream& err) {
    const Hypergraph H = load_hypergraph(a.h_path);
    const WsatResult res = wsat_exact(a.n, H, a.opts);
    const char* rel = res.method == WsatMethod::Exact ? " = " : " <= ";
    out << "wsat(" << a.n << ", H)" << rel << res.value << " (" << method_name(res.method)
        << ")\n";
    out << "minimizer:\n" << serialize_hypergraph(res.minimizer);
    if (!a.out_path.empty()) {
        write_json_file(a.out_path, wsat_result_to_json(res));
        out << "result written to " << a.out_path << "\n";
    }
    err << "# saturation checks: " << res.saturation_checks << "\n";
    return 0;
}

int cmd_cover(const CoverArgs& a, std::ostream& out) {
    const CoverFamily fam = a.exact ? exact_min_cover(a.size_x, a.k, a.t, a.delta)
                                    : greedy_cover(a.size_x, a.k, a.t, a.delta);
    const Json j = cover_to_json(fam);
    if (a.out_path.empty())
        out << j.dump(2) << "\n";
    else {
        write_json_file(a.out_path, j);
        out << "cover with " << fam.blocks.size() << " blocks written to " << a.out_path << "\n";
    }
    return 0;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    const Hypergraph H = load_hypergraph(a.h_path);
    SearchOptions opts;
    opts.budget = a.budget;
    ConstructionResult c = [&] {
        if (!a.f0_path.empty()) {
            const Hypergraph F0 = load_hypergraph(a.f0_path);
            if (F0.n() != a.m)
                throw InvalidParametersError("--m is " + std::to_string(a.m) + " but " +
                                             a.f0_path + " has " + std::to_string(F0.n()) +
                                             " vertices");
            return construct(H, F0, a.n);
        }
        const WsatResult seed = wsat_exact(a.m, H, opts);
        if (seed.method != WsatMethod::Exact)
            throw PreconditionError("seed search at m=" + std::to_string(a.m) +
                                    " exceeded its budget; pass --f0 with an explicit seed");
        err << "# seed: wsat(" << a.m << ", H) = " << seed.value << "\n";
        return construct(H, seed.minimizer, a.n, /*trust_seed=*/true);
    }();
    const PercolationCertificate cert = full_certificate(c, H);
    const int v = static_cast<int>(c.Z.size());
    const std::uint64_t bound = c.cover.blocks.size() * c.F0.edge_count();
    const std::uint64_t denom = binomial(a.n - v, c.s - 1);
    out << "n = " << a.n << ", v = " << v << ", s = " << c.s << "\n"
        << "blocks = " << c.cover.blocks.size() << " (k = " << c.cover.k << ", t = " << c.cover.t
        << "), |E(F0)| = " << c.F0.edge_count() << "\n"
        << "|E(F)| = " << c.F.edge_count() << " <= blocks * |E(F0)| = " << bound << "\n";
    out << std::fixed << std::setprecision(6)
        << "C(n-v, s-1) = " << denom << ", ratio = "
        << static_cast<double>(c.F.edge_count()) / static_cast<double>(denom) << "\n";
    out << "certificate: " << cert.steps.size() << " steps (complete), verified\n";
    write_json_file(a.out_path, construction_to_json(c, cert));
    out << "construction written to " << a.out_path << "\n";
    return 0;
}

int cmd_verify_cert(const CertArgs& a, std::ostream& out) {
    const PercolationCertificate cert = certificate_from_json(parse_json_file(a.f_path));
    const Hypergraph H = load_hypergraph(a.h_path);
    const VerifyResult res = verify_certificate(cert, H);
    if (res.ok) {
        out << "valid: " << cert.steps.size() << " steps, final "
            << (cert.final_claim == FinalClaim::Complete ? "complete" : "closure") << "\n";
        return 0;
    }
    if (res.failed_step)
        out << "invalid at step " << *res.failed_step << ": " << res.reason << "\n";
    else
        out << "invalid: " << res.reason << "\n";
    return 1;
}

int cmd_ratio_table(const RatioArgs& a, std::ostream& out, std::ostream& err) {
    const Hypergraph H = load_hypergraph(a.h_path);
    SearchOptions opts;
    opts.budget = a.budget;
    const std::vector<RatioRow> rows = ratio_table(H, a.from, a.to, a.m, opts);
    out << ratio_table_csv(rows);
    write_text_file(a.plot_path, ratio_table_plot(rows));
    err << "# plot data written to " << a.plot_path << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weak saturation toolkit: percolation certificates, exact wsat search, "
                 "covering designs, and the block construction"};
    app.require_subcommand(1);
    app.fallthrough();
    int seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized paths (all current commands are deterministic)")
        ->capture_default_str();

    std::string sp_h;
    auto* c_sp = app.add_subcommand("sparseness", "compute s(H) with its witness (S, U)");
    c_sp->add_option("H-file", sp_h, "hypergraph file for H")->required();

    CertArgs cl;
    auto* c_cl = app.add_subcommand("closure", "bootstrap closure of F under H");
    c_cl->add_option("F-file", cl.f_path, "hypergraph file for F")->required();
    c_cl->add_option("H-file", cl.h_path, "hypergraph file for H")->required();
    c_cl->add_option("--cert", cl.cert_path, "write the percolation certificate here");

    CertArgs cw;
    auto* c_cw = app.add_subcommand("check-wsat", "decide whether F is weakly H-saturated");
    c_cw->add_option("F-file", cw.f_path, "hypergraph file for F")->required();
    c_cw->add_option("H-file", cw.h_path, "hypergraph file for H")->required();
    c_cw->add_option("--cert", cw.cert_path,
                     "certificate output path (default: <F-file>.cert.json)");

    WsatMinArgs wm;
    auto* c_wm = app.add_subcommand("wsat-min", "exact wsat(n, H) by iterative deepening");
    c_wm->add_option("n", wm.n, "number of vertices")->required();
    c_wm->add_option("H-file", wm.h_path, "hypergraph file for H")->required();
    c_wm->add_option("--budget", wm.opts.budget, "cap on saturation checks")
        ->capture_default_str();
    c_wm->add_flag("--orbit-prune", wm.opts.orbit_prune,
                   "skip candidates that are not lex-minimal in their S_n orbit (n <= 8)");
    c_wm->add_option("--out", wm.out_path, "write the full result as JSON");

    CoverArgs cv;
    auto* c_cv = app.add_subcommand("cover", "covering design: every t-subset in some k-block");
    c_cv->add_option("sizeX", cv.size_x, "ground set size |X|")->required();
    c_cv->add_option("k", cv.k, "block size")->required();
    c_cv->add_option("t", cv.t, "covered subset size")->required();
    c_cv->add_flag("--exact", cv.exact, "branch-and-bound minimum cover (guarded)");
    c_cv->add_option("--delta", cv.delta, "delta recorded in the reported bound")
        ->capture_default_str();
    c_cv->add_option("--out", cv.out_path, "write the cover JSON here instead of stdout");

    ConstructArgs cs;
    auto* c_cs = app.add_subcommand("construct",
                                    "block construction: F0 copies over Z glued via a cover");
    c_cs->add_option("H-file", cs.h_path, "hypergraph file for H")->required();
    c_cs->add_option("n", cs.n, "target vertex count")->required();
    c_cs->add_option("--m", cs.m, "seed vertex count")->required();
    c_cs->add_option("--f0", cs.f0_path, "seed hypergraph file (default: exact search at m)");
    c_cs->add_option("--out", cs.out_path, "construction bundle output path")
        ->capture_default_str();
    c_cs->add_option("--budget", cs.budget, "cap on saturation checks for the seed search")
        ->capture_default_str();

    CertArgs vc;
    auto* c_vc = app.add_subcommand("verify-cert", "replay and verify a percolation certificate");
    c_vc->add_option("cert-file", vc.f_path, "certificate JSON")->required();
    c_vc->add_option("H-file", vc.h_path, "hypergraph file for H")->required();

    RatioArgs rt;
    auto* c_rt = app.add_subcommand("ratio-table",
                                    "wsat(n, H) / C(n-v, s-1) over a range of n (CSV)");
    c_rt->add_option("H-file", rt.h_path, "hypergraph file for H")->required();
    c_rt->add_option("--from", rt.from, "first n")->required();
    c_rt->add_option("--to", rt.to, "last n")->required();
    c_rt->add_option("--m", rt.m, "seed vertex count for construction rows")->required();
    c_rt->add_option("--budget", rt.budget, "cap on saturation checks per exact row")
        ->capture_default_str();
    c_rt->add_option("--plot", rt.plot_path, "plot data output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (*c_sp)
            code = cmd_sparseness(sp_h, out);
        else if (*c_cl)
            code = cmd_closure(cl, out);
        else if (*c_cw)
            code = cmd_check_wsat(cw, out);
        else if (*c_wm)
            code = cmd_wsat_min(wm, out, err);
        else if (*c_cv)
            code = cmd_cover(cv, out);
        else if (*c_cs)
            code = cmd_construct(cs, out, err);
        else if (*c_vc)
            code = cmd_verify_cert(vc, out);
        else if (*c_rt)
            code = cmd_ratio_table(rt, out, err);
    } catch (const InvalidParametersError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    err << "# elapsed: " << std::fixed << std::setprecision(2) << elapsed.count() << "s\n";
    return code;
}

}  // namespace wsat
