#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "mfh/cli.hpp"
#include "mfh/meanfield.hpp"
#include "mfh/oracles.hpp"
#include "mfh/repnum.hpp"
#include "mfh/symfunc.hpp"

namespace mfh::cli {

namespace {

using young::Partition;

struct Ctx {
    SuiteResult& res;
    void check(bool ok, const std::function<std::string()>& describe) {
        ++res.checks;
        if (!ok && res.passed) {
            res.passed = false;
            res.counterexample = describe();
        }
    }
};

// First exponent where the two polynomials differ, or nullopt.
std::optional<int> first_difference(const QPoly& expected, const QPoly& got) {
    std::set<int> exps;
    for (const auto& [e, c] : expected.coeffs()) exps.insert(e);
    for (const auto& [e, c] : got.coeffs()) exps.insert(e);
    for (int e : exps)
        if (expected.coeff(e) != got.coeff(e)) return e;
    return std::nullopt;
}

void compare_poly(Ctx& ctx, const QPoly& expected, const QPoly& got, const std::string& where) {
    const auto e = first_difference(expected, got);
    ctx.check(!e, [&] {
        std::ostringstream os;
        os << where << " exponent=" << *e << " expected=" << to_string(expected.coeff(*e))
           << " got=" << to_string(got.coeff(*e));
        return os.str();
    });
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

void suite_anchors(Ctx& ctx, const VerifyOptions& o) {
    auto lit = [](std::initializer_list<std::pair<int, Rational>> terms) {
        QPoly p;
        for (const auto& [e, c] : terms) p += QPoly::monomial(e, c);
        return p;
    };
    if (o.max_n >= 2) compare_poly(ctx, lit({{0, 3}, {2, 1}}), meanfield::partition_function_exact(2), "Z n=2");
    if (o.max_n >= 3) {
        compare_poly(ctx, lit({{0, 4}, {3, 4}}), meanfield::partition_function_exact(3), "Z n=3");
        compare_poly(ctx, lit({{0, 6}, {3, 16}, {6, 2}}), meanfield::weighted_cycle_expectation_exact(3, 1),
                     "E(alpha_1 2^alpha) n=3 k=1");
        compare_poly(ctx, lit({{0, 2}, {6, -2}}), meanfield::weighted_cycle_expectation_exact(3, 2),
                     "E(alpha_2 2^alpha) n=3 k=2");
    }
}

void suite_triple_route(Ctx& ctx, const VerifyOptions& o) {
    for (int n = 1; n <= o.max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            QPoly brute = oracles::brute_force_weighted(n, k);
            if (o.inject_fault && n == o.max_n && k == 1) brute += QPoly::monomial(1, 1);
            compare_poly(ctx, brute, meanfield::weighted_cycle_expectation_exact(n, k), "phi route " + nk(n, k));
            compare_poly(ctx, brute, meanfield::weighted_cycle_expectation_spectral(n, k), "spectral route " + nk(n, k));
        }
}

void suite_partition_function(Ctx& ctx, const VerifyOptions& o) {
    for (int n = 1; n <= o.max_n; ++n) {
        QPoly z;
        try {
            z = meanfield::partition_function_exact(n);
        } catch (const meanfield::RouteDisagreement& e) {
            ctx.check(false, [&] { return std::string(e.what()); });
            continue;
        }
        compare_poly(ctx, oracles::brute_force_partition_function(n), z, "Z n=" + std::to_string(n));
        // Mass identity: sum_k k E(alpha_k 2^alpha) = n Z.
        QPoly mass;
        for (int k = 1; k <= n; ++k) mass += meanfield::weighted_cycle_expectation_exact(n, k) * Rational(k);
        compare_poly(ctx, z * Rational(n), mass, "mass identity n=" + std::to_string(n));
    }
}

void suite_fourier(Ctx& ctx, const VerifyOptions& o) {
    for (int n = 1; n <= std::min(o.max_n, 7); ++n) {
        const BigInt nf = factorial(static_cast<unsigned long>(n));
        const auto types = young::partitions(n);
        for (const auto& lam : types) {
            BigInt s2 = 0;
            for (const auto& ty : types)
                s2 += symfunc::class_size(ty) * (BigInt(1) << symfunc::cycle_count(ty)) * repnum::character(lam, ty);
            const BigInt expect2 = lam.parts() <= 2 ? nf * (lam.row(1) - lam.row(2) + 1) : BigInt(0);
            ctx.check(s2 == expect2, [&] {
                return "sum 2^alpha chi n=" + std::to_string(n) + " lambda=" + lam.str() +
                       " expected=" + expect2.get_str() + " got=" + s2.get_str();
            });
            for (int k = 1; k <= n; ++k) {
                BigInt s = 0;
                for (const auto& ty : types)
                    s += symfunc::class_size(ty) * symfunc::cycles_of_length(ty, k) *
                         (BigInt(1) << symfunc::cycle_count(ty)) * repnum::character(lam, ty);
                const Rational expect = Rational(nf) * repnum::a_coeff(lam, k);
                ctx.check(Rational(s) == expect, [&] {
                    return "sum alpha_k 2^alpha chi " + nk(n, k) + " lambda=" + lam.str() +
                           " expected=" + to_string(expect) + " got=" + s.get_str();
                });
            }
        }
    }
}

void suite_heat_kernel(Ctx& ctx, const VerifyOptions& o) {
    const double ts[] = {0.05, 0.2, 0.5, 1.0, 2.5};
    for (int n = 1; n <= std::min(o.max_n, 5); ++n) {
        const double dev = oracles::heat_kernel_matrix_deviation(n, ts);
        ctx.check(dev <= 1e-10, [&] { return "matrix exponential n=" + std::to_string(n) + " deviation=" + std::to_string(dev); });
    }
}

void suite_quantum(Ctx& ctx, const VerifyOptions& o) {
    const int top = std::min(o.max_n, o.full ? 8 : 6);
    for (int n = 2; n <= top; ++n)
        for (double beta : {0.1, 0.5, 1.0, 2.0}) {
            const auto q = oracles::quantum_observables(n, beta);
            const double m2 = meanfield::magnetisation_sq(n, beta / 2);
            const double z = std::exp(meanfield::log_partition_function_spectral(n, beta / 2));
            const double c = oracles::quantum_z_constant(n, beta);
            std::ostringstream where;
            where.precision(15);
            where << "n=" << n << " beta=" << beta;
            ctx.check(std::fabs(q.m2_q / m2 - 1) <= 1e-8, [&] {
                std::ostringstream os;
                os.precision(15);
                os << where.str() << " m2 expected=" << m2 << " got=" << q.m2_q;
                return os.str();
            });
            ctx.check(std::fabs(q.Z_q / z / c - 1) <= 1e-8, [&] {
                std::ostringstream os;
                os.precision(15);
                os << where.str() << " Z_q/Z expected=" << c << " got=" << q.Z_q / z;
                return os.str();
            });
        }
}

void suite_symfunc(Ctx& ctx, const VerifyOptions& o) {
    using symfunc::SymPoly;
    const int top = std::min(o.max_n, o.full ? 8 : 6);
    for (int n = 1; n <= top; ++n) {
        const int v = n;
        auto two_row_sum = [v](int m) {
            SymPoly s(v);
            for (const auto& ab : young::two_row_partitions(m))
                s += symfunc::schur(ab, v) * Rational(ab.row(1) - ab.row(2) + 1);
            return s;
        };
        const std::string ns = "n=" + std::to_string(n);
        ctx.check(symfunc::frobenius_ch(symfunc::two_pow_alpha(n), v) == two_row_sum(n),
                  [&] { return "ch(2^alpha) " + ns; });
        for (int k = 1; k <= n; ++k) {
            const SymPoly rhs = symfunc::power_sum(k, v) * two_row_sum(n - k) * make_rational(2, k);
            ctx.check(symfunc::frobenius_ch(symfunc::alpha_k_two_pow_alpha(n, k), v) == rhs,
                      [&] { return "ch(alpha_k 2^alpha) " + nk(n, k); });
        }
        SymPoly lhs(v), rhs(v);
        for (const auto& lam : young::partitions(n)) {
            long w = 1;
            for (int r : lam.rows()) w *= r + 1;
            lhs += symfunc::monomial_sym(lam, v) * Rational(w);
        }
        for (int i = 0; i <= n; ++i) rhs += symfunc::complete_homogeneous(i, v) * symfunc::complete_homogeneous(n - i, v);
        ctx.check(lhs == rhs, [&] { return "Pieri " + ns; });
    }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
    if (opts.max_n < 1 || opts.max_n > oracles::kMaxExactN) throw UsageError("max-n must be ≤ 8");
    const std::pair<const char*, void (*)(Ctx&, const VerifyOptions&)> suites[] = {
        {"anchors", suite_anchors},
        {"triple-route", suite_triple_route},
        {"partition-function", suite_partition_function},
        {"fourier", suite_fourier},
        {"heat-kernel", suite_heat_kernel},
        {"quantum", suite_quantum},
        {"symfunc", suite_symfunc},
    };
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : suites) {
        SuiteResult r;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        Ctx ctx{r};
        try {
            fn(ctx, opts);
        } catch (const std::exception& e) {
            r.passed = false;
            if (r.counterexample.empty()) r.counterexample = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mfh::cli
