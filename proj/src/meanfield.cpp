#include "mfh/meanfield.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mfh/repnum.hpp"

namespace mfh::meanfield {

namespace {

void check_phi_args(int n, int a, int b, int k) {
    if (k < 1 || b < 0 || a < b || a + b != n - k) {
        std::ostringstream os;
        os << "phi: need a >= b >= 0, a + b = n - k, k >= 1 (n=" << n << " a=" << a << " b=" << b << " k=" << k << ")";
        throw std::invalid_argument(os.str());
    }
}

void check_psi_args(int n, int b, int k) {
    if (k < 1 || k > n || b < 0 || 2 * b > n - k) {
        std::ostringstream os;
        os << "psi: need 1 <= k <= n and 0 <= b <= (n-k)/2 (n=" << n << " b=" << b << " k=" << k << ")";
        throw std::invalid_argument(os.str());
    }
}

// Integral of x^p (1-x)^{k-1} over [y, 1] with y = q^k, as a polynomial in q.
QPoly upper_beta_poly(int p, int k) {
    QPoly r;
    for (int j = 0; j < k; ++j) {
        Rational c = Rational(binomial(k - 1, j)) * make_rational(1, p + j + 1);
        if (j % 2) c = -c;
        r += (QPoly(1) - QPoly::monomial(k * (p + j + 1))) * c;
    }
    return r;
}

double log_bigint(const BigInt& v) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

// ---- exact ---------------------------------------------------------------

QPoly phi_exact(int n, int a, int b, int k) {
    check_phi_args(n, a, b, k);
    const QPoly tail = QPoly::one_minus_pow(k, k - 1);  // (1 - y)^{k-1}
    if (b == 0) {
        QPoly bracket = (QPoly::monomial(k * (n - k + 1)) * tail) + upper_beta_poly(n - k, k) * Rational(k);
        return bracket * Rational(binomial(n, k));
    }
    QPoly bracket = (QPoly::monomial(k * (a + b + 2)) * tail) * make_rational(a + 1 - b, k);
    bracket += upper_beta_poly(a + 1, k).shifted(k * b) * Rational(a + 1 - b + k);
    bracket += upper_beta_poly(b, k).shifted(k * (a + 1)) * Rational(a + 1 - b - k);
    return bracket.shifted(a * b + b) * Rational(multinomial3(n, k - 1, a + 1, b));
}

QPoly psi_exact(int n, int b, int k) {
    check_psi_args(n, b, k);
    const int a = n - k - b;
    return phi_exact(n, a, b, k) * Rational(a + 1 - b);
}

QPoly tau_spectral(const Partition& mu, int k) {
    if (mu.parts() > 2) throw std::invalid_argument("tau_spectral needs a two-row mu");
    QPoly r;
    for (int i = 1; i <= k + 2; ++i) {
        const Rational d = repnum::signed_dimension(mu, k, i);
        if (d == 0) continue;
        r += QPoly::monomial(static_cast<int>(repnum::rho_shifted(mu, k, i)), d);
    }
    return r;
}

QPoly weighted_cycle_expectation_exact(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("weighted_cycle_expectation needs 1 <= k <= n");
    QPoly s;
    for (int b = 0; 2 * b <= n - k; ++b) s += psi_exact(n, b, k);
    return s * make_rational(2, k);
}

QPoly weighted_cycle_expectation_spectral(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("weighted_cycle_expectation needs 1 <= k <= n");
    QPoly s;
    for (const auto& mu : young::two_row_partitions(n - k))
        s += tau_spectral(mu, k) * Rational(mu.row(1) - mu.row(2) + 1);
    return s * make_rational(2, k);
}

QPoly unweighted_cycle_expectation_exact(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("unweighted_cycle_expectation needs 1 <= k <= n");
    QPoly bracket = (QPoly::monomial(k * (n - k + 1)) * QPoly::one_minus_pow(k, k - 1)) * make_rational(1, k);
    bracket += upper_beta_poly(n - k, k);
    return bracket * Rational(binomial(n, k));
}

QPoly partition_function_spectral(int n) {
    if (n < 1) throw std::invalid_argument("partition_function needs n >= 1");
    QPoly z;
    for (const auto& lam : young::two_row_partitions(n)) {
        const long weight = n - 2L * lam.row(2) + 1;
        z += QPoly::monomial(static_cast<int>(repnum::rho(lam)), Rational(repnum::dimension(lam) * weight));
    }
    return z;
}

QPoly partition_function_exact(int n) {
    QPoly spectral = partition_function_spectral(n);
    QPoly psi_route;
    for (int k = 1; k <= n; ++k)
        for (int b = 0; 2 * b <= n - k; ++b) psi_route += psi_exact(n, b, k);
    psi_route *= make_rational(2, n);
    if (!(psi_route == spectral))
        throw RouteDisagreement("exact Z routes disagree at n=" + std::to_string(n) + ": spectral " + spectral.str() +
                                " vs psi " + psi_route.str());
    return spectral;
}

QRatio magnetisation_sq_exact(int n) {
    if (n < 1) throw std::invalid_argument("magnetisation_sq needs n >= 1");
    QPoly num, den;
    for (int k = 1; k <= n; ++k)
        for (int b = 0; 2 * b <= n - k; ++b) {
            const QPoly p = psi_exact(n, b, k);
            den += p;
            num += p * Rational(static_cast<long>(n) * k);
        }
    return {num, den};
}

QPoly expected_character_exact(const Partition& lambda) {
    return QPoly::monomial(static_cast<int>(repnum::rho(lambda)), Rational(repnum::dimension(lambda)));
}

QRatio residual_truncated_exact(int n, int M) {
    if (M < 0 || M >= n) throw std::invalid_argument("residual_truncated needs 0 <= M < n");
    QPoly num, den;
    for (int k = 1; k <= n; ++k)
        for (int b = 0; 2 * b <= n - k; ++b) {
            const QPoly p = psi_exact(n, b, k);
            den += p * Rational(2);
            if (k > M) num += p;
        }
    return {num, den};
}

// ---- float ---------------------------------------------------------------

LogSigned psi_log(int n, int b, int k, double t) {
    check_psi_args(n, b, k);
    const LogFactorials lf(n + 1);
    return psi_cell(n, b, k, t, lf).value;
}

LogSigned phi_log(int n, int a, int b, int k, double t) {
    check_phi_args(n, a, b, k);
    return psi_log(n, b, k, t).scaled(-std::log(static_cast<double>(a + 1 - b)));
}

LogSigned weighted_cycle_expectation(int n, int k, double t) {
    if (k < 1 || k > n) throw std::invalid_argument("weighted_cycle_expectation needs 1 <= k <= n");
    const LogFactorials lf(n + 1);
    std::vector<LogSigned> vals;
    for (int b = 0; 2 * b <= n - k; ++b) vals.push_back(psi_cell(n, b, k, t, lf).value);
    return log_sum(vals).scaled(std::log(2.0 / k));
}

LogSigned unweighted_cycle_expectation(int n, int k, double t) {
    if (k < 1 || k > n) throw std::invalid_argument("unweighted_cycle_expectation needs 1 <= k <= n");
    const LogFactorials lf(n + 1);
    const double log_y = -t * k;
    const LogSigned tail =
        k == 1 ? LogSigned::from_log(0.0) : LogSigned::from_log((k - 1) * log1mexp(log_y));
    const LogSigned first = tail.scaled((n - k + 1) * log_y - std::log(static_cast<double>(k)));
    const LogSigned second = incomplete_beta_upper(log_y, n - k + 1, k);
    return (first + second).scaled(lf.log_binomial(n, k));
}

LogSigned expected_character(const Partition& lambda, double t) {
    return LogSigned::from_log(log_bigint(repnum::dimension(lambda)) - t * static_cast<double>(repnum::rho(lambda)));
}

double log_partition_function_spectral(int n, double t) {
    if (n < 1) throw std::invalid_argument("partition_function needs n >= 1");
    const LogFactorials lf(n + 1);
    std::vector<LogSigned> terms;
    for (int b = 0; 2 * b <= n; ++b) {
        const double w = n - 2.0 * b + 1.0;
        // d_{[n-b,b]} = C(n,b) (n-2b+1)/(n-b+1); rho = b (n-b+1).
        const double log_d = lf(n) - lf(b) - lf(n - b + 1) + std::log(w);
        terms.push_back(LogSigned::from_log(std::log(w) + log_d - t * b * (n - b + 1.0)));
    }
    return log_sum(terms).log_abs;
}

PsiSums psi_sums(int n, double t, Kernel kernel) {
    return kernel == Kernel::Parallel ? psi_sums_parallel(n, t) : psi_sums_serial(n, t);
}

PointResult evaluate_point(int n, double t, Kernel kernel) {
    if (n < 1) throw std::invalid_argument("evaluate_point needs n >= 1");
    if (!(t >= 0.0)) throw std::invalid_argument("evaluate_point needs t >= 0");
    const PsiSums s = psi_sums(n, t, kernel);
    if (s.total.sign <= 0) throw NumericError("sum of psi is not positive at n=" + std::to_string(n));
    PointResult r;
    r.n = n;
    r.t = t;
    r.log_Z = log_partition_function_spectral(n, t);
    r.log_Z_psi = std::log(2.0 / n) + s.total.log_abs;
    r.m2 = n * std::exp(s.k_weighted.log_abs - s.total.log_abs);
    r.clamp_events = s.clamp_events;
    r.cells = s.cells;
    const double rel = std::fabs(std::expm1(r.log_Z_psi - r.log_Z));
    if (!(rel <= kRouteTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "Z routes disagree at n=" << n << " t=" << t << ": log Z spectral " << r.log_Z << ", psi " << r.log_Z_psi
           << " (relative " << rel << ")";
        throw RouteDisagreement(os.str());
    }
    return r;
}

LogSigned partition_function(int n, double t, Kernel kernel) {
    return LogSigned::from_log(evaluate_point(n, t, kernel).log_Z);
}

double magnetisation_sq(int n, double t, Kernel kernel) { return evaluate_point(n, t, kernel).m2; }

double residual_truncated(const PsiSums& sums, int M) {
    if (M < 0 || M >= sums.n) throw std::invalid_argument("residual_truncated needs 0 <= M < n");
    const std::vector<LogSigned> tail(sums.per_k.begin() + M, sums.per_k.end());
    const LogSigned num = log_sum(tail);
    const LogSigned den = log_sum(sums.per_k);
    if (num.sign == 0) return 0.0;
    return 0.5 * std::exp(num.log_abs - den.log_abs);
}

double residual_truncated(int n, int M, double t, Kernel kernel) { return residual_truncated(psi_sums(n, t, kernel), M); }

// ---- large deviations -----------------------------------------------------

double mu_fn(double beta, double tau) {
    if (beta < 0.0 || beta > 0.5) throw std::invalid_argument("mu_fn needs 0 <= beta <= 1/2");
    const double ent = (beta > 0.0 ? beta * std::log(beta) : 0.0) + (1.0 - beta) * std::log1p(-beta);
    return ent + tau * beta * (1.0 - beta);
}

double beta_max(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("beta_max needs tau > 0");
    constexpr int grid = 1000;
    int best = 0;
    double best_val = mu_fn(0.0, tau);
    for (int i = 1; i <= grid; ++i) {
        const double v = mu_fn(0.5 * i / grid, tau);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best == grid) return 0.5;
    auto dmu = [tau](double b) { return std::log(b / (1.0 - b)) + tau * (1.0 - 2.0 * b); };
    double lo = best == 0 ? 1e-300 : 0.5 * (best - 1) / grid;
    double hi = 0.5 * (best + 1) / grid;
    if (lo <= 0.0) lo = 1e-300;
    if (dmu(lo) > 0.0 || dmu(hi) < 0.0) return 0.5 * best / grid;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (dmu(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace mfh::meanfield
