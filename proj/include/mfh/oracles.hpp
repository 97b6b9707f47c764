#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mfh/qpoly.hpp"
#include "mfh/young.hpp"

namespace mfh::oracles {

using young::Partition;

inline constexpr int kMaxExactN = 8;

/// p_t(pi) per cycle type, as polynomials in q = e^{-t}.
struct HeatKernelClassFn {
    int n = 0;
    std::map<Partition, QPoly> values;
    const QPoly& at(const Partition& type) const;
};

/// Fourier inversion: p_t(type) = sum_lambda (d_lambda / n!) chi_lambda(type) q^{rho(lambda)}.
HeatKernelClassFn heat_kernel(int n);

/// Largest entrywise gap between heat_kernel(n) and exp(tL) built from the
/// n! x n! generator, over the given t values. n <= 5.
double heat_kernel_matrix_deviation(int n, std::span<const double> ts);

/// sum_type |C_type| alpha_k 2^alpha p_t(type).
QPoly brute_force_weighted(int n, int k);
/// sum_type |C_type| 2^alpha p_t(type).
QPoly brute_force_partition_function(int n);

/// Cycle type of a permutation given in one-line notation on 0..n-1.
Partition cycle_type(std::span<const int> perm);

struct QuantumObservables {
    double Z_q = 0.0;
    double m2_q = 0.0;
};

/// Exact diagonalization of H = -1/4 sum_{i<j} (XX + YY + ZZ) on 2 <= n <= 8
/// spins. m2_q = Tr[(sum sigma^z)^2 e^{-beta H}] / Z_q.
QuantumObservables quantum_observables(int n, double beta);

/// Z_q(beta) / Z(beta / 2); H = -1/2 sum P_ij + C(n,2)/4 with P the swap.
double quantum_z_constant(int n, double beta);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

struct McConfig {
    int n = 2;
    double t = 0.0;
    std::int64_t samples = 10000;
    std::uint64_t seed = 1;
    int k_max = 5;
    int batches = 100;
    int threads = 0;  // 0: OpenMP default
};

struct McReport {
    McEstimate Z;                     // E(2^alpha)
    McEstimate m2;                    // E(sum k^2 alpha_k 2^alpha) / E(2^alpha)
    McEstimate fix;                   // E(alpha_1)
    std::vector<McEstimate> weighted; // weighted[k-1] = E(alpha_k 2^alpha)
};

inline constexpr std::int64_t kMinSamples = 10000;
inline constexpr int kMinBatches = 30;

/// Complete-graph interchange process to time t. Each batch is one replica
/// with its own generator seeded from (seed, batch index); batch means give
/// the standard errors.
McReport mc_interchange(const McConfig& config);

}  // namespace mfh::oracles
