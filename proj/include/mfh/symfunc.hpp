#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mfh/rational.hpp"
#include "mfh/young.hpp"

namespace mfh::symfunc {

using young::Partition;
using Exponents = std::vector<int>;

/// Polynomial in v variables with exact rational coefficients. Symmetric
/// polynomials are the intended content; is_symmetric() checks it.
class SymPoly {
public:
    explicit SymPoly(int variables = 0);

    int variables() const noexcept { return v_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    Rational coeff(const Exponents& e) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_symmetric() const;

    void add_term(const Exponents& e, const Rational& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rational& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
    friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    std::string str() const;

private:
    int v_;
    std::map<Exponents, Rational> terms_;
};

/// Exact rational-valued function on the conjugacy classes of S_n.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational> values;

    static ClassFunction from(int n, const std::function<Rational(const Partition&)>& f);
    const Rational& at(const Partition& type) const;
};

/// n! / prod_k k^{m_k} m_k!
BigInt class_size(const Partition& cycle_type);

int cycle_count(const Partition& cycle_type);
int cycles_of_length(const Partition& cycle_type, int k);

/// 2^alpha and alpha_k 2^alpha as class functions.
ClassFunction two_pow_alpha(int n);
ClassFunction alpha_k_two_pow_alpha(int n, int k);
/// alpha_k alone.
ClassFunction alpha_k(int n, int k);

SymPoly monomial_sym(const Partition& lambda, int v);
SymPoly power_sum(int k, int v);
/// Complete homogeneous polynomial: sum of all monomials of degree k.
SymPoly complete_homogeneous(int k, int v);

/// Schur polynomial as the ratio of alternants a_{lambda+delta} / a_delta,
/// dividing out one factor (x_i - x_j) at a time. Results are cached.
SymPoly schur(const Partition& lambda, int v);
/// Sum over semistandard tableaux; slow reference.
SymPoly schur_by_tableaux(const Partition& lambda, int v);

/// sum_{lambda |- n} (average of f over the Young subgroup T_lambda) M_lambda.
SymPoly frobenius_ch(const ClassFunction& f, int v);

/// Average of f over T_lambda = prod Sym_{lambda_i}.
Rational young_subgroup_average(const ClassFunction& f, const Partition& lambda);

struct SignedSchur {
    Partition lambda;
    int sign = 1;
    friend bool operator==(const SignedSchur&, const SignedSchur&) = default;
};

/// u_k S_mu = sum over E_k(mu) of (-1)^{hght+1} S_lambda.
std::vector<SignedSchur> border_strip_product(int k, const Partition& mu, int v);

/// Expands a signed Schur list into a SymPoly.
SymPoly expand(const std::vector<SignedSchur>& terms, int v);

}  // namespace mfh::symfunc
