#include "mfh/rational.hpp"

namespace mfh {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial3(long n, long k1, long k2, long k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0 || k1 + k2 + k3 != n) return 0;
    return binomial(n, k1) * binomial(n - k1, k2);
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace mfh
