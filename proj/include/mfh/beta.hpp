#pragma once

#include <stdexcept>
#include <string>

#include "mfh/log_signed.hpp"

namespace mfh {

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// log B(p, q) = lgamma(p) + lgamma(q) - lgamma(p + q).
double log_beta(double p, double q);

/// Continued fraction of the regularized incomplete beta, modified Lentz.
/// Returns the CF value; throws NumericError after max_iterations.
double beta_continued_fraction(double x, double p, double q);

/// Integral of x^(p-1) (1-x)^(q-1) over [y, 1], with y = exp(log_y).
/// Requires p >= 1, q >= 1, log_y <= 0.
LogSigned incomplete_beta_upper(double log_y, double p, double q);

inline constexpr double kBetaCfTolerance = 1e-14;
inline constexpr int kBetaCfMaxIterations = 300;

}  // namespace mfh
