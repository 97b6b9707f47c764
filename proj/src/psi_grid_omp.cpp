#include <cmath>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "mfh/psi_grid.hpp"

namespace mfh::meanfield {

PsiSums psi_sums_parallel(int n, double t) {
    if (n < 1) throw std::invalid_argument("psi sums need n >= 1");
    const LogFactorials lf(n + 1);
    const auto nk = static_cast<std::size_t>(n);
    std::vector<LogSigned> per_k(nk);
    std::vector<std::int64_t> cells(nk, 0), clamps(nk, 0), negatives(nk, 0);
    std::vector<std::exception_ptr> errors(nk);

    // Row lengths shrink with k; dynamic scheduling balances them.
#pragma omp parallel for schedule(dynamic, 4)
    for (int k = 1; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(k - 1);
        try {
            std::vector<LogSigned> vals;
            vals.reserve(static_cast<std::size_t>((n - k) / 2 + 1));
            for (int b = 0; 2 * b <= n - k; ++b) {
                const PsiCell c = psi_cell(n, b, k, t, lf);
                ++cells[idx];
                if (c.clamped) ++clamps[idx];
                if (c.value.sign < 0) ++negatives[idx];
                vals.push_back(c.value);
            }
            per_k[idx] = log_sum(vals);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    PsiSums out;
    out.n = n;
    out.t = t;
    std::vector<LogSigned> weighted(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        weighted[i] = per_k[i].scaled(std::log(static_cast<double>(i + 1)));
        out.cells += cells[i];
        out.clamp_events += clamps[i];
        out.negative_cells += negatives[i];
    }
    out.total = log_sum(per_k);
    out.k_weighted = log_sum(weighted);
    out.per_k = std::move(per_k);
    return out;
}

}  // namespace mfh::meanfield
