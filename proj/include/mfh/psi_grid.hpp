#pragma once

#include <cstdint>
#include <vector>

#include "mfh/log_signed.hpp"

namespace mfh::meanfield {

/// log n! for n = 0..max, accumulated with Kahan compensation.
class LogFactorials {
public:
    explicit LogFactorials(int max_n);
    double operator()(int n) const { return table_[static_cast<std::size_t>(n)]; }
    double log_binomial(int n, int k) const { return (*this)(n) - (*this)(k) - (*this)(n - k); }
    int max() const noexcept { return static_cast<int>(table_.size()) - 1; }

private:
    std::vector<double> table_;
};

/// Relative magnitude below which the signed three-term sum of psi is set to
/// exact zero.
inline constexpr double kPsiClampRelative = 1e-12;

struct PsiCell {
    LogSigned value;
    bool clamped = false;
};

/// psi(b, k, t) in log space.
PsiCell psi_cell(int n, int b, int k, double t, const LogFactorials& lf);

/// Reductions of the psi grid at one (n, t).
struct PsiSums {
    int n = 0;
    double t = 0.0;
    LogSigned total;               // sum_{b,k} psi
    LogSigned k_weighted;          // sum_{b,k} k psi
    std::vector<LogSigned> per_k;  // per_k[k-1] = sum_b psi(b, k)
    std::int64_t cells = 0;
    std::int64_t clamp_events = 0;
    std::int64_t negative_cells = 0;  // unclamped cells with negative value
};

/// Serial reference: cells visited k ascending, b ascending; totals use one
/// two-pass log-sum over all cells in that order. Bit-reproducible.
PsiSums psi_sums_serial(int n, double t);

/// OpenMP kernel: per-k partial sums in parallel, combined in k order.
/// Agrees with the serial reference to a few ulps per term.
PsiSums psi_sums_parallel(int n, double t);

/// Every cell, indexed [k-1][b]. Used by positivity checks.
std::vector<std::vector<PsiCell>> psi_grid(int n, double t);

}  // namespace mfh::meanfield
