// One PASS/FAIL line per acceptance criterion. Exit 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfh/cli.hpp"
#include "mfh/meanfield.hpp"
#include "mfh/oracles.hpp"
#include "mfh/repnum.hpp"
#include "mfh/symfunc.hpp"

using namespace mfh;
using young::Partition;

namespace {

// Pinned tolerances and budgets.
constexpr double kQuantumRel = 1e-8;
constexpr double kAnchorRel = 1e-9;
constexpr double kMassRel = 1e-9;
constexpr double kClampFraction = 1e-3;
constexpr double kSubcriticalBound = 5.0;  // m^2/n at tau = 1.5; the n -> inf limit is 4
constexpr double kSupercriticalSpread = 0.20;
constexpr double kSupercriticalFloor = 0.01;
constexpr double kTauHatLo = 1.8, kTauHatHi = 2.2;
constexpr double kBetaMaxAt3 = 0.0707, kBetaMaxTol = 1e-3;
constexpr double kMcSigmas = 3.0;
constexpr double kResidualSuper = 0.01, kResidualSub = 0.005;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void require(bool cond, const std::function<std::string()>& why) {
        if (!cond) fail(why());
    }
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// 1 --------------------------------------------------------------------------
void triple_route(Outcome& o) {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const QPoly a = meanfield::weighted_cycle_expectation_exact(n, k);
            const QPoly b = meanfield::weighted_cycle_expectation_spectral(n, k);
            const QPoly c = oracles::brute_force_weighted(n, k);
            o.require(a == b && b == c, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
        }
}

// 2 --------------------------------------------------------------------------
void fourier(Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
        const BigInt nf = factorial(static_cast<unsigned long>(n));
        const auto ps = young::partitions(n);
        for (const auto& lam : ps) {
            BigInt s2 = 0;
            for (const auto& ty : ps)
                s2 += symfunc::class_size(ty) * (BigInt(1) << symfunc::cycle_count(ty)) * repnum::character(lam, ty);
            const BigInt want = lam.parts() <= 2 ? nf * (lam.row(1) - lam.row(2) + 1) : BigInt(0);
            o.require(s2 == want, [&] { return "2^alpha at " + lam.str(); });
            for (int k = 1; k <= n; ++k) {
                BigInt s = 0;
                for (const auto& ty : ps)
                    s += symfunc::class_size(ty) * symfunc::cycles_of_length(ty, k) *
                         (BigInt(1) << symfunc::cycle_count(ty)) * repnum::character(lam, ty);
                o.require(Rational(s) == Rational(nf) * repnum::a_coeff(lam, k),
                          [&] { return "alpha_k 2^alpha at " + lam.str() + " k=" + std::to_string(k); });
            }
        }
    }
}

// 3 --------------------------------------------------------------------------
void decompositions(Outcome& o) {
    using symfunc::SymPoly;
    for (int n = 1; n <= 8; ++n) {
        const int v = n;
        auto two_row_sum = [v](int m) {
            SymPoly s(v);
            for (const auto& ab : young::two_row_partitions(m))
                s += symfunc::schur(ab, v) * Rational(ab.row(1) - ab.row(2) + 1);
            return s;
        };
        const std::string ns = "n=" + std::to_string(n);
        o.require(symfunc::frobenius_ch(symfunc::two_pow_alpha(n), v) == two_row_sum(n), [&] { return "(1) " + ns; });
        for (int k = 1; k <= n; ++k) {
            const SymPoly rhs = symfunc::power_sum(k, v) * two_row_sum(n - k) * make_rational(2, k);
            o.require(symfunc::frobenius_ch(symfunc::alpha_k_two_pow_alpha(n, k), v) == rhs,
                      [&] { return "(2) " + ns + " k=" + std::to_string(k); });
        }
        SymPoly lhs(v), rhs(v);
        for (const auto& lam : young::partitions(n)) {
            long w = 1;
            for (int r : lam.rows()) w *= r + 1;
            lhs += symfunc::monomial_sym(lam, v) * Rational(w);
        }
        for (int i = 0; i <= n; ++i) rhs += symfunc::complete_homogeneous(i, v) * symfunc::complete_homogeneous(n - i, v);
        o.require(lhs == rhs, [&] { return "Pieri " + ns; });
    }
}

// 4 --------------------------------------------------------------------------
void quantum(Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
        double first_scaled = 0.0;
        for (double beta : {0.1, 0.5, 1.0, 2.0}) {
            const auto q = oracles::quantum_observables(n, beta);
            const double m2 = meanfield::magnetisation_sq(n, beta / 2);
            const double z = std::exp(meanfield::log_partition_function_spectral(n, beta / 2));
            o.require(rel(q.m2_q, m2) <= kQuantumRel,
                      [&] { return fmt("m2 n=%g beta=%g rel=%.3g", n, beta, rel(q.m2_q, m2)); });
            const double ratio = q.Z_q / z;
            const double constant = oracles::quantum_z_constant(n, beta);
            o.require(rel(ratio, constant) <= kQuantumRel,
                      [&] { return fmt("Z ratio n=%g beta=%g rel=%.3g", n, beta, rel(ratio, constant)); });
            const double scaled = ratio * std::exp(-beta * n * (n - 1) / 8.0);
            if (first_scaled == 0.0) first_scaled = scaled;
            o.require(rel(scaled, first_scaled) <= kQuantumRel, [&] { return fmt("ratio drifts n=%g beta=%g", n, beta); });
        }
    }
}

// 5 --------------------------------------------------------------------------
void anchors(Outcome& o) {
    for (double t : {0.0, 0.1, 0.5, 1.0, 3.0}) {
        const double e = std::exp(-2 * t);
        o.require(rel(meanfield::magnetisation_sq(2, t), 8 / (3 + e)) <= kAnchorRel, [&] { return fmt("n=2 m2 t=%g", t); });
        o.require(rel(meanfield::partition_function(2, t).to_double(), 3 + e) <= kAnchorRel,
                  [&] { return fmt("n=2 Z t=%g", t); });
    }
    const QPoly z3 = QPoly(4) + QPoly::monomial(3, 4);
    o.require(meanfield::partition_function_exact(3) == z3, [] { return std::string("n=3 Z"); });
    const QRatio m3 = meanfield::magnetisation_sq_exact(3);
    o.require(m3.num * z3 == (QPoly(20) + QPoly::monomial(3, 4)) * m3.den, [] { return std::string("n=3 m2"); });
    for (int n : {1, 2, 3, 10, 100, 500, 1000, 2000}) {
        const auto p = meanfield::evaluate_point(n, 0.0);
        o.require(rel(p.log_Z, n * std::log(2.0)) <= kAnchorRel && rel(p.m2, n) <= kAnchorRel,
                  [&] { return fmt("t=0 n=%g", n); });
    }
}

// 6 --------------------------------------------------------------------------
void mass(Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
        QPoly m;
        for (int k = 1; k <= n; ++k) m += meanfield::weighted_cycle_expectation_exact(n, k) * Rational(k);
        o.require(m == meanfield::partition_function_exact(n) * Rational(n), [&] { return fmt("exact n=%g", n); });
    }
    for (int n : {200, 1000, 2000})
        for (int i = 0; i < 20; ++i) {
            const double tau = 0.2 + 3.8 * i / 19.0;
            const double t = tau / n;
            std::vector<LogSigned> terms;
            for (int k = 1; k <= n; ++k)
                terms.push_back(meanfield::weighted_cycle_expectation(n, k, t).scaled(std::log(static_cast<double>(k))));
            const double lhs = log_sum(terms).log_abs;
            const double rhs = std::log(static_cast<double>(n)) + meanfield::log_partition_function_spectral(n, t);
            const double err = std::fabs(std::expm1(lhs - rhs));
            o.require(err <= kMassRel, [&] { return fmt("n=%g tau=%g rel=%.3g", n, tau, err); });
        }
}

// 7 --------------------------------------------------------------------------
void positivity(Outcome& o) {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> tau(0.2, 4.0);
    std::int64_t cells = 0, clamps = 0;
    for (int n : {50, 200})
        for (int rep = 0; rep < 20; ++rep) {
            const double tv = tau(rng);
            const auto s = meanfield::psi_sums(n, tv / n);
            cells += s.cells;
            clamps += s.clamp_events;
            o.require(s.negative_cells == 0, [&] { return fmt("negative psi n=%g tau=%g", n, tv); });
            for (const auto& row : meanfield::psi_grid(n, tv / n))
                for (const auto& c : row)
                    o.require(c.value.sign >= 0, [&] { return fmt("negative cell n=%g tau=%g", n, tv); });
        }
    const double frac = static_cast<double>(clamps) / static_cast<double>(cells);
    o.require(frac < kClampFraction, [&] { return fmt("clamp fraction %.3g", frac); });
    if (o.ok) o.detail = fmt("%g cells, %g clamped", static_cast<double>(cells), static_cast<double>(clamps));
}

// 8 --------------------------------------------------------------------------
void phase_transition(Outcome& o) {
    const std::vector<int> ns{250, 500, 1000, 2000};
    std::vector<double> taus{1.5, 3.0};
    for (double x : cli::tau_grid(1.6, 2.4, 9)) taus.push_back(x);
    std::sort(taus.begin(), taus.end());
    std::vector<cli::CurveRow> rows;
    for (double tau : taus)
        for (int n : ns) rows.push_back(cli::curve_point(n, tau, false, true));
    const auto s = cli::summarize_transition(ns, rows);
    for (const auto& line : s.lines) {
        if (line.tau == 1.5) {
            o.require(line.strictly_decreasing, [] { return std::string("tau=1.5 not decreasing"); });
            for (std::size_t i = 0; i < ns.size(); ++i) {
                const double m2n = line.m2_over_n2[i] * ns[i];
                o.require(m2n <= kSubcriticalBound, [&] { return fmt("tau=1.5 n=%g m2/n=%g", ns[i], m2n); });
            }
        }
        if (line.tau == 3.0) {
            o.require(line.spread < kSupercriticalSpread, [&] { return fmt("tau=3 spread %.3g", line.spread); });
            for (double v : line.m2_over_n2) o.require(v > kSupercriticalFloor, [&] { return fmt("tau=3 m2/n2=%g", v); });
        }
    }
    o.require(s.tau_hat && *s.tau_hat >= kTauHatLo && *s.tau_hat <= kTauHatHi,
              [&] { return s.tau_hat ? fmt("tau_hat=%.4f", *s.tau_hat) : std::string("no crossing"); });
    if (o.ok) o.detail = fmt("tau_hat=%.4f", *s.tau_hat);
}

// 9 --------------------------------------------------------------------------
void beta_max(Outcome& o) {
    for (double tau : {1.0, 1.5, 1.9})
        o.require(meanfield::beta_max(tau) == 0.5, [&] { return fmt("tau=%g beta_max=%g", tau, meanfield::beta_max(tau)); });
    for (double tau : {2.1, 3.0, 5.0})
        o.require(meanfield::beta_max(tau) < 0.5, [&] { return fmt("tau=%g beta_max=%g", tau, meanfield::beta_max(tau)); });
    const double b3 = meanfield::beta_max(3.0);
    o.require(std::fabs(b3 - kBetaMaxAt3) <= kBetaMaxTol, [&] { return fmt("beta_max(3)=%.5f", b3); });
}

// 10 -------------------------------------------------------------------------
void monte_carlo(Outcome& o) {
    struct Case {
        int n;
        double tau;
        std::uint64_t seed;
    };
    double worst = 0.0;
    for (const Case& c : {Case{10, 1.0, 1001}, Case{20, 3.0, 1002}, Case{30, 2.0, 1003}}) {
        oracles::McConfig cfg;
        cfg.n = c.n;
        cfg.t = c.tau / c.n;
        cfg.samples = 1000000;
        cfg.seed = c.seed;
        cfg.k_max = 5;
        const auto r = oracles::mc_interchange(cfg);
        auto check = [&](const char* what, const oracles::McEstimate& e, double want) {
            const double z = std::fabs(e.mean - want) / e.std_error;
            worst = std::max(worst, z);
            o.require(z <= kMcSigmas, [&] { return fmt("n=%g tau=%g ", c.n, c.tau) + what + fmt(" z=%.2f", z); });
        };
        const auto p = meanfield::evaluate_point(c.n, cfg.t);
        check("Z", r.Z, std::exp(p.log_Z));
        check("m2", r.m2, p.m2);
        check("fix", r.fix, meanfield::unweighted_cycle_expectation(c.n, 1, cfg.t).to_double());
        for (int k = 1; k <= 5; ++k)
            check(("E_alpha" + std::to_string(k)).c_str(), r.weighted[static_cast<std::size_t>(k - 1)],
                  meanfield::weighted_cycle_expectation(c.n, k, cfg.t).to_double());
    }
    if (o.ok) o.detail = fmt("max |z| = %.2f", worst);
}

// 11 -------------------------------------------------------------------------
void residual(Outcome& o) {
    const double sup = meanfield::residual_truncated(1000, 50, 3.0 / 1000);
    const double sub = meanfield::residual_truncated(1000, 50, 1.5 / 1000);
    o.require(sup >= kResidualSuper, [&] { return fmt("tau=3: %g", sup); });
    o.require(sub <= kResidualSub, [&] { return fmt("tau=1.5: %g", sub); });
    for (int n : {2, 10, 100, 1000, 2000})
        for (double tau : {0.0, 0.5, 1.5, 2.0, 3.0, 6.0})
            o.require(meanfield::residual_truncated(n, 0, tau / n) == 0.5, [&] { return fmt("M=0 n=%g tau=%g", n, tau); });
    for (int n = 1; n <= 7; ++n) {
        const QRatio r = meanfield::residual_truncated_exact(n, 0);
        o.require(r.num * Rational(2) == r.den, [&] { return fmt("exact M=0 n=%g", n); });
    }
    if (o.ok) o.detail = fmt("tau=3: %.4f, tau=1.5: %.5f", sup, sub);
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {"1  exact triple-route equality", 60, triple_route},
        {"2  Fourier identities", 60, fourier},
        {"3  symmetric-function decompositions", 300, decompositions},
        {"4  quantum correspondence", 120, quantum},
        {"5  closed-form anchors", 600, anchors},
        {"6  mass identity", 600, mass},
        {"7  psi positivity", 600, positivity},
        {"8  phase transition signature", 600, phase_transition},
        {"9  beta_max criterion", 600, beta_max},
        {"10 Monte Carlo concordance", 600, monte_carlo},
        {"11 residual observable", 600, residual},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) o.fail(fmt("took %.1f s, budget %.0f s", secs, c.budget_seconds));
        failed += !o.ok;
        std::printf("%s  %-40s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
