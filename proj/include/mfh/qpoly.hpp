#pragma once

#include <map>
#include <string>

#include "mfh/rational.hpp"

namespace mfh {

/// Exact polynomial in q = e^{-t} with rational coefficients. Zero
/// coefficients are never stored.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& c);  // NOLINT: constant polynomial
    QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT

    static QPoly monomial(int exponent, const Rational& coeff = 1);
    /// (1 - q^step)^power expanded by the binomial theorem.
    static QPoly one_minus_pow(int step, int power);

    const std::map<int, Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int exponent) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const;

    /// Value at q = e^{-t}.
    long double eval(double t) const;
    /// Value at a given q (exact).
    Rational eval_at(const Rational& q) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rational& c);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const { return *this * Rational(-1); }

    /// Multiplies by q^shift.
    QPoly shifted(int shift) const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// e.g. "6 + 16q^3 + 2q^6".
    std::string str() const;

private:
    void add_term(int exponent, const Rational& c);
    std::map<int, Rational> coeffs_;
};

/// num / den, both exact; used for ratios such as m^2 and residual sums.
struct QRatio {
    QPoly num;
    QPoly den;
    long double eval(double t) const { return num.eval(t) / den.eval(t); }
};

}  // namespace mfh
