#pragma once

#include "mfh/rational.hpp"
#include "mfh/young.hpp"

namespace mfh::repnum {

using young::Partition;

/// d_lambda via the Young-Frobenius formula n! prod(h_t - h_s) / prod h_t!.
BigInt dimension(const Partition& lambda);

/// Complete-graph Laplacian eigenvalue C(n,2) + content_sum(lambda).
long rho(const Partition& lambda);

/// C(n,2) + content_sum(mu) + k (i - mu_i - (k+1)/2), n = |mu| + k.
long rho_shifted(const Partition& mu, int k, int i);

/// D(mu, k, i) from the hook numbers of F_{k,i}(mu):
/// n! / prod gamma^(t)! * prod_{t<s} (gamma^(t) - gamma^(s)).
/// mu must have at most two rows; 1 <= i <= k + 2.
Rational signed_dimension(const Partition& mu, int k, int i);

/// Same quantity via wrapping: +-d_delta with sign (-1)^{hght(delta\mu)+1}
/// when Y(F_{k,i}(mu)) is Young, else 0.
Rational signed_dimension_by_wrap(const Partition& mu, int k, int i);

/// Closed forms: the i = 1, 2 expressions and, for i > 2, the binomial
/// summand (a+1-b)/k C(n; k-1, a+1, b) (-1)^{i+1} C(k-1, i-3) ratio.
Rational signed_dimension_closed_form(const Partition& mu, int k, int i);

/// Fourier coefficient of alpha_k 2^alpha at lambda, summed over every
/// [a,b] |- n-k with lambda \ [a,b] a border strip.
Rational a_coeff(const Partition& lambda, int k);

/// chi_lambda on the class of the given cycle type (Murnaghan-Nakayama),
/// memoized. Thread-safe.
BigInt character(const Partition& lambda, const Partition& cycle_type);

}  // namespace mfh::repnum
