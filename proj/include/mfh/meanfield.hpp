#pragma once

#include <cstdint>

#include "mfh/beta.hpp"
#include "mfh/log_signed.hpp"
#include "mfh/psi_grid.hpp"
#include "mfh/qpoly.hpp"
#include "mfh/young.hpp"

namespace mfh::meanfield {

using young::Partition;

/// Raised when the spectral and psi routes for Z disagree.
class RouteDisagreement : public NumericError {
public:
    using NumericError::NumericError;
};

/// Relative tolerance for the float-mode two-route check of Z.
inline constexpr double kRouteTolerance = 1e-9;

// ---- exact mode: polynomials in q = e^{-t} -------------------------------

/// phi([a,b], k, t) with y = q^k; the beta integrals are expanded with the
/// binomial theorem.
QPoly phi_exact(int n, int a, int b, int k);
/// (a + 1 - b) phi([n-k-b, b], k, t).
QPoly psi_exact(int n, int b, int k);
/// sum_i D(mu, k, i) q^{rho_shifted(mu, k, i)} over i = 1..k+2.
QPoly tau_spectral(const Partition& mu, int k);
/// E(alpha_k 2^alpha) = (2/k) sum_b psi.
QPoly weighted_cycle_expectation_exact(int n, int k);
/// (2/k) sum_{[a,b] |- n-k} (a - b + 1) tau_spectral([a,b], k).
QPoly weighted_cycle_expectation_spectral(int n, int k);
/// E(alpha_k) from the closed form, as an exact polynomial.
QPoly unweighted_cycle_expectation_exact(int n, int k);
/// Spectral sum; throws RouteDisagreement unless (2/n) sum psi matches exactly.
QPoly partition_function_exact(int n);
/// sum_b (n - 2b + 1) d_{[n-b,b]} q^{rho([n-b,b])}.
QPoly partition_function_spectral(int n);
/// n sum k psi / sum psi.
QRatio magnetisation_sq_exact(int n);
/// d_lambda q^{rho(lambda)}.
QPoly expected_character_exact(const Partition& lambda);
/// (1/2)(1/Z) sum_{k > M} (k/n) E(alpha_k 2^alpha).
QRatio residual_truncated_exact(int n, int M);

// ---- float mode ----------------------------------------------------------

LogSigned phi_log(int n, int a, int b, int k, double t);
LogSigned psi_log(int n, int b, int k, double t);
LogSigned weighted_cycle_expectation(int n, int k, double t);
LogSigned unweighted_cycle_expectation(int n, int k, double t);
LogSigned expected_character(const Partition& lambda, double t);

/// log of sum_b (n - 2b + 1) d_{[n-b,b]} e^{-t b (n-b+1)}.
double log_partition_function_spectral(int n, double t);

enum class Kernel { Serial, Parallel };

PsiSums psi_sums(int n, double t, Kernel kernel = Kernel::Serial);

struct PointResult {
    int n = 0;
    double t = 0.0;
    double log_Z = 0.0;        // spectral route
    double log_Z_psi = 0.0;    // (2/n) sum psi
    double m2 = 0.0;
    std::int64_t clamp_events = 0;
    std::int64_t cells = 0;
};

/// Z and m^2 at one (n, t); throws RouteDisagreement if the two Z routes
/// differ by more than kRouteTolerance relative.
PointResult evaluate_point(int n, double t, Kernel kernel = Kernel::Serial);

/// Spectral Z with the route check.
LogSigned partition_function(int n, double t, Kernel kernel = Kernel::Serial);
double magnetisation_sq(int n, double t, Kernel kernel = Kernel::Serial);
double residual_truncated(int n, int M, double t, Kernel kernel = Kernel::Serial);
/// Same, from precomputed sums.
double residual_truncated(const PsiSums& sums, int M);

// ---- large-deviation helpers ---------------------------------------------

/// (1-b) log(1-b) + b log b + tau b (1-b), with mu(0) = 0.
double mu_fn(double beta, double tau);
/// Minimiser of mu on [0, 1/2]: grid scan then bisection on mu'.
double beta_max(double tau);

}  // namespace mfh::meanfield
