#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "mfh/cli.hpp"
#include "mfh/meanfield.hpp"
#include "mfh/oracles.hpp"

namespace mfh::cli {

namespace {

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad n-list entry '" + item + "'");
        }
        if (pos != item.size() || v < 2) throw UsageError("bad n-list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.size() < 2) throw UsageError("n-list needs at least two values");
    return out;
}

void write_file_or(std::ostream& fallback, const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        fallback << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << content;
}

std::string fixed(double v, int prec) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

}  // namespace

int resolve_threads(std::optional<int> flag) {
    if (flag) {
        if (*flag < 1) throw UsageError("--threads must be a positive integer");
        return *flag;
    }
    if (const char* env = std::getenv("MF_THREADS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 4096) throw UsageError("MF_THREADS must be a positive integer");
        return static_cast<int>(v);
    }
    return std::max(1, omp_get_num_procs());
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mean-field quantum Heisenberg ferromagnet via the interchange process"};
    app.require_subcommand(1);

    // curve
    auto* curve = app.add_subcommand("curve", "Tabulate log Z and m^2 over a tau grid");
    int c_n = 0, c_steps = 1;
    double c_tmin = 0, c_tmax = 0;
    std::string c_out;
    bool c_exact = false;
    std::optional<int> c_threads;
    curve->add_option("--n", c_n, "number of spins")->required();
    curve->add_option("--tau-min", c_tmin)->required();
    curve->add_option("--tau-max", c_tmax)->required();
    curve->add_option("--steps", c_steps)->required();
    curve->add_option("--out", c_out, "CSV path (stdout if omitted)");
    curve->add_flag("--exact", c_exact, "exact polynomials (n <= 12)");
    curve->add_option("--threads", c_threads);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the exact verification suites");
    int v_max_n = 7;
    std::string v_level = "fast";
    bool v_inject = false;
    verify->add_option("--max-n", v_max_n, "largest n (<= 8)");
    verify->add_option("--level", v_level)->check(CLI::IsMember({"fast", "full"}));
#ifdef MFH_FAULT_INJECTION
    verify->add_flag("--inject-fault", v_inject)->group("");
#endif

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo interchange process against the formulas");
    int s_n = 0, s_k_max = 0, s_batches = 100;
    double s_tau = 0;
    std::int64_t s_samples = 0;
    std::uint64_t s_seed = 1;
    std::optional<int> s_threads;
    simulate->add_option("--n", s_n)->required();
    simulate->add_option("--tau", s_tau)->required();
    simulate->add_option("--samples", s_samples)->required();
    simulate->add_option("--seed", s_seed);
    simulate->add_option("--k-max", s_k_max, "largest cycle length reported (default min(5, n))");
    simulate->add_option("--batches", s_batches);
    simulate->add_option("--threads", s_threads);

    // transition
    auto* transition = app.add_subcommand("transition", "Scan m^2/n^2 across n and tau");
    std::string t_nlist, t_out;
    double t_tmin = 0, t_tmax = 0;
    int t_steps = 1;
    std::optional<int> t_threads;
    transition->add_option("--n-list", t_nlist, "comma-separated n values")->required();
    transition->add_option("--tau-min", t_tmin)->required();
    transition->add_option("--tau-max", t_tmax)->required();
    transition->add_option("--steps", t_steps)->required();
    transition->add_option("--out", t_out, "CSV path");
    transition->add_option("--threads", t_threads);

    // svg
    auto* svg = app.add_subcommand("svg", "Render a curve CSV as SVG");
    std::string g_in, g_out;
    svg->add_option("--in", g_in)->required();
    svg->add_option("--out", g_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*curve) {
            if (c_n < 2) throw UsageError("--n must be >= 2");
            const int threads = resolve_threads(c_threads);
            omp_set_num_threads(threads);
            const auto rows = compute_curve(c_n, tau_grid(c_tmin, c_tmax, c_steps), c_exact, threads > 1);
            std::ostringstream csv;
            write_curve_csv(csv, rows);
            write_file_or(out, c_out, csv.str());
            return kOk;
        }
        if (*verify) {
            if (v_max_n > oracles::kMaxExactN || v_max_n < 1) throw UsageError("max-n must be ≤ 8");
            const auto results = run_verify({v_max_n, v_level == "full", v_inject});
            bool ok = true;
            out << std::left << std::setw(20) << "suite" << std::setw(8) << "result" << std::setw(10) << "checks"
                << "seconds\n";
            for (const auto& r : results) {
                out << std::left << std::setw(20) << r.name << std::setw(8) << (r.passed ? "PASS" : "FAIL")
                    << std::setw(10) << r.checks << std::fixed << std::setprecision(3) << r.seconds << std::defaultfloat << '\n';
                ok = ok && r.passed;
            }
            for (const auto& r : results)
                if (!r.passed) {
                    err << "first counterexample (" << r.name << "): " << r.counterexample << '\n';
                    break;
                }
            return ok ? kOk : kVerifyFailed;
        }
        if (*simulate) {
            if (s_n < 2) throw UsageError("--n must be >= 2");
            if (s_samples < oracles::kMinSamples) throw UsageError("--samples must be >= 10000");
            if (s_batches < oracles::kMinBatches) throw UsageError("--batches must be >= 30");
            if (!(s_tau >= 0.0) || !std::isfinite(s_tau)) throw UsageError("--tau must be >= 0");
            if (s_k_max == 0) s_k_max = std::min(5, s_n);
            if (s_k_max < 1 || s_k_max > s_n) throw UsageError("--k-max must lie in [1, n]");
            if (s_n > 60) throw UsageError("--n must be <= 60 for Monte Carlo");
            oracles::McConfig cfg;
            cfg.n = s_n;
            cfg.t = s_tau / s_n;
            cfg.samples = s_samples;
            cfg.seed = s_seed;
            cfg.k_max = s_k_max;
            cfg.batches = s_batches;
            cfg.threads = resolve_threads(s_threads);
            const auto rep = oracles::mc_interchange(cfg);
            const auto point = meanfield::evaluate_point(s_n, cfg.t);
            auto line = [&](const std::string& name, const oracles::McEstimate& e, double formula) {
                const double z = e.std_error > 0 ? (e.mean - formula) / e.std_error : (e.mean == formula ? 0.0 : INFINITY);
                out << name << ',' << fixed(e.mean, 10) << ',' << fixed(e.std_error, 4) << ',' << fixed(formula, 10) << ','
                    << fixed(z, 3) << '\n';
            };
            out << "# n=" << s_n << " tau=" << s_tau << " t=" << fixed(cfg.t, 12) << " samples=" << s_samples
                << " seed=" << s_seed << " batches=" << s_batches << '\n';
            out << "observable,estimate,std_error,formula,z\n";
            line("Z", rep.Z, std::exp(point.log_Z));
            line("m2", rep.m2, point.m2);
            line("fix", rep.fix, 1.0 + (s_n - 1) * std::exp(-cfg.t * s_n));
            for (int k = 1; k <= s_k_max; ++k)
                line("E_alpha" + std::to_string(k) + "_2^alpha", rep.weighted[static_cast<std::size_t>(k - 1)],
                     meanfield::weighted_cycle_expectation(s_n, k, cfg.t).to_double());
            return kOk;
        }
        if (*transition) {
            const auto ns = parse_n_list(t_nlist);
            const auto taus = tau_grid(t_tmin, t_tmax, t_steps);
            const int threads = resolve_threads(t_threads);
            omp_set_num_threads(threads);
            std::vector<CurveRow> rows;
            for (double tau : taus)
                for (int n : ns) rows.push_back(curve_point(n, tau, false, threads > 1));
            if (!t_out.empty()) {
                std::ostringstream csv;
                write_curve_csv(csv, rows);
                write_file_or(out, t_out, csv.str());
            }
            const auto s = summarize_transition(ns, rows);
            out << "tau";
            for (int n : ns) out << ",n=" << n;
            out << ",slope,strictly_decreasing,spread,regime\n";
            for (const auto& l : s.lines) {
                out << fixed(l.tau, 6);
                for (double v : l.m2_over_n2) out << ',' << fixed(v, 8);
                out << ',' << fixed(l.slope, 5) << ',' << (l.strictly_decreasing ? "yes" : "no") << ','
                    << fixed(l.spread, 4) << ',' << (l.subcritical ? "subcritical" : "supercritical") << '\n';
            }
            if (s.tau_hat) out << "tau_hat," << fixed(*s.tau_hat, 6) << '\n';
            else out << "tau_hat,none\n";
            return kOk;
        }
        if (*svg) {
            std::ifstream in(g_in, std::ios::binary);
            if (!in) throw UsageError("cannot read '" + g_in + "'");
            const auto rows = parse_curve_csv(in);
            write_file_or(out, g_out, render_svg(rows));
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}

}  // namespace mfh::cli
