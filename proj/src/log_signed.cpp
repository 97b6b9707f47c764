#include "mfh/log_signed.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mfh {

LogSigned operator/(LogSigned a, LogSigned b) {
    if (b.sign == 0) throw std::domain_error("LogSigned division by zero");
    if (a.sign == 0) return {};
    return {a.sign * b.sign, a.log_abs - b.log_abs};
}

LogSigned operator+(LogSigned a, LogSigned b) noexcept {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.log_abs < b.log_abs) std::swap(a, b);
    const double d = b.log_abs - a.log_abs;  // <= 0
    if (a.sign == b.sign) return {a.sign, a.log_abs + std::log1p(std::exp(d))};
    if (d == 0.0) return {};
    return {a.sign, a.log_abs + log1mexp(d)};
}

LogSigned log_sum(std::span<const LogSigned> terms) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms)
        if (t.sign != 0) top = std::max(top, t.log_abs);
    if (top == -std::numeric_limits<double>::infinity()) return {};
    double s = 0.0;
    for (const auto& t : terms)
        if (t.sign != 0) s += t.sign * std::exp(t.log_abs - top);
    return LogSigned::from_double(s).scaled(top);
}

std::string LogSigned::str() const {
    std::ostringstream os;
    if (sign == 0) {
        os << "0";
    } else {
        os << (sign < 0 ? "-" : "+") << "exp(" << log_abs << ")";
    }
    return os.str();
}

}  // namespace mfh
