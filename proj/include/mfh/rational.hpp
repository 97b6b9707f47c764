#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mfh {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// n! / (k1! k2! k3!) with k1 + k2 + k3 == n; zero when any part is negative.
BigInt multinomial3(long n, long k1, long k2, long k3);

inline Rational make_rational(long num, long den = 1) {
    Rational r{BigInt(num), BigInt(den)};
    r.canonicalize();
    return r;
}

inline Rational ratio(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r);

}  // namespace mfh
