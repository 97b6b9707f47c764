#include "mfh/beta.hpp"

#include <cmath>
#include <sstream>

namespace mfh {

double log_beta(double p, double q) { return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q); }

double beta_continued_fraction(double x, double p, double q) {
    constexpr double tiny = 1e-300;
    const double qab = p + q;
    const double qap = p + 1.0;
    const double qam = p - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaCfMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (q - m) * x / ((qam + m2) * (p + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kBetaCfTolerance) return h;
    }
    std::ostringstream os;
    os.precision(17);
    os << "incomplete beta continued fraction did not converge in " << kBetaCfMaxIterations
       << " iterations (x=" << x << ", p=" << p << ", q=" << q << ", last=" << h << ")";
    throw NumericError(os.str());
}

LogSigned incomplete_beta_upper(double log_y, double p, double q) {
    if (!(p >= 1.0) || !(q >= 1.0) || !(log_y <= 0.0)) {
        std::ostringstream os;
        os << "incomplete_beta_upper: invalid arguments log_y=" << log_y << " p=" << p << " q=" << q;
        throw std::invalid_argument(os.str());
    }
    if (log_y == 0.0) return LogSigned::zero();
    if (std::isinf(log_y)) return LogSigned::from_log(log_beta(p, q));

    const double y = std::exp(log_y);
    const double log_1my = log1mexp(log_y);
    const double one_minus_y = -std::expm1(log_y);
    if (y < (p + 1.0) / (p + q + 2.0)) {
        // Lower tail is the smaller piece; 1 - I_y(p, q) does not cancel here.
        const double lb = log_beta(p, q);
        const double log_lower = p * log_y + q * log_1my - std::log(p) - lb +
                                 std::log(beta_continued_fraction(y, p, q));
        return LogSigned::from_log(lb + std::log1p(-std::exp(log_lower)));
    }
    // B(p,q) I_{1-y}(q, p) = (1-y)^q y^p CF / q.
    return LogSigned::from_log(q * log_1my + p * log_y - std::log(q) +
                               std::log(beta_continued_fraction(one_minus_y, q, p)));
}

}  // namespace mfh
