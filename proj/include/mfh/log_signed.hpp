#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>

namespace mfh {

/// A real number stored as sign * exp(log_abs). Zero has sign 0.
struct LogSigned {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    static LogSigned zero() { return {}; }
    static LogSigned from_log(double log_abs, int sign = 1) {
        if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity()) return {};
        return {sign > 0 ? 1 : -1, log_abs};
    }
    static LogSigned from_double(double x) {
        if (x == 0.0) return {};
        return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
    }

    bool is_zero() const noexcept { return sign == 0; }
    double to_double() const noexcept { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogSigned operator-() const noexcept { return {-sign, log_abs}; }
    friend LogSigned operator*(LogSigned a, LogSigned b) noexcept {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }
    friend LogSigned operator/(LogSigned a, LogSigned b);
    friend LogSigned operator+(LogSigned a, LogSigned b) noexcept;
    friend LogSigned operator-(LogSigned a, LogSigned b) noexcept { return a + (-b); }

    /// Multiplies by exp(log_factor).
    LogSigned scaled(double log_factor) const noexcept {
        return sign == 0 ? LogSigned{} : LogSigned{sign, log_abs + log_factor};
    }

    std::string str() const;
};

/// Two-pass signed sum: find the largest magnitude, then add the shifted terms
/// in the given order.
LogSigned log_sum(std::span<const LogSigned> terms);

/// log(1 - exp(x)) for x <= 0.
inline double log1mexp(double x) {
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    return x > -0.6931471805599453 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

}  // namespace mfh
