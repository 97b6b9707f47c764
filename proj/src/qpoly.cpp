#include "mfh/qpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfh {

QPoly::QPoly(const Rational& c) {
    if (c != 0) coeffs_.emplace(0, c);
}

QPoly QPoly::monomial(int exponent, const Rational& coeff) {
    if (exponent < 0) throw std::invalid_argument("QPoly exponent must be nonnegative");
    QPoly p;
    p.add_term(exponent, coeff);
    return p;
}

QPoly QPoly::one_minus_pow(int step, int power) {
    if (power < 0) throw std::invalid_argument("negative power");
    QPoly p;
    for (int j = 0; j <= power; ++j) {
        Rational c(binomial(power, j));
        if (j % 2) c = -c;
        p.add_term(step * j, c);
    }
    return p;
}

Rational QPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int QPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

long double QPoly::eval(double t) const {
    long double s = 0;
    for (const auto& [e, c] : coeffs_) {
        const long double term = static_cast<long double>(c.get_d()) * std::exp(-static_cast<long double>(t) * e);
        s += term;
    }
    return s;
}

Rational QPoly::eval_at(const Rational& q) const {
    Rational s = 0;
    for (const auto& [e, c] : coeffs_) {
        Rational pw;
        mpz_pow_ui(pw.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(pw.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
        pw.canonicalize();
        s += c * pw;
    }
    return s;
}

void QPoly::add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, v] : coeffs_) v *= c;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

QPoly QPoly::shifted(int shift) const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) {
        if (e + shift < 0) throw std::invalid_argument("QPoly shift produces a negative exponent");
        r.coeffs_.emplace(e + shift, c);
    }
    return r;
}

std::string QPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str();
            os << 'q';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

}  // namespace mfh
