#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mfh/beta.hpp"
#include "mfh/psi_grid.hpp"

namespace mfh::meanfield {

namespace {

// (1 - y)^power with y = exp(log_y), keeping 0^0 = 1.
LogSigned one_minus_y_pow(int power, double log_y) {
    if (power == 0) return LogSigned::from_log(0.0);
    return LogSigned::from_log(power * log1mexp(log_y));
}

LogSigned signed_log_of(long v) {
    if (v == 0) return {};
    return LogSigned::from_log(std::log(static_cast<double>(std::labs(v))), v > 0 ? 1 : -1);
}

}  // namespace

LogFactorials::LogFactorials(int max_n) : table_(static_cast<std::size_t>(std::max(max_n, 1)) + 1, 0.0) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 2; i < table_.size(); ++i) {
        const double y = std::log(static_cast<double>(i)) - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        table_[i] = sum;
    }
}

PsiCell psi_cell(int n, int b, int k, double t, const LogFactorials& lf) {
    if (k < 1 || k > n || b < 0 || 2 * b > n - k)
        throw std::invalid_argument("psi: (b, k) outside 1 <= k <= n, 0 <= b <= (n-k)/2");
    const int a = n - k - b;
    const double log_y = -t * k;
    PsiCell cell;

    if (b == 0) {
        const double pref = std::log(static_cast<double>(a + 1)) + lf.log_binomial(n, k);
        const LogSigned t1 = one_minus_y_pow(k - 1, log_y).scaled((n - k + 1) * log_y);
        const LogSigned t2 = incomplete_beta_upper(log_y, n - k + 1, k).scaled(std::log(static_cast<double>(k)));
        cell.value = (t1 + t2).scaled(pref);
        return cell;
    }

    const double pref = std::log(static_cast<double>(a + 1 - b)) + lf(n) - lf(k - 1) - lf(a + 1) - lf(b) -
                        t * (static_cast<double>(a) * b + b);
    const std::array<LogSigned, 3> terms{
        (signed_log_of(a + 1 - b) * one_minus_y_pow(k - 1, log_y))
            .scaled((a + b + 2) * log_y - std::log(static_cast<double>(k))),
        (signed_log_of(a + 1 - b + k) * incomplete_beta_upper(log_y, a + 2, k)).scaled(b * log_y),
        a + 1 - b - k == 0 ? LogSigned{}
                           : (signed_log_of(a + 1 - b - k) * incomplete_beta_upper(log_y, b + 1, k))
                                 .scaled((a + 1) * log_y),
    };
    // Largest magnitude first.
    std::array<LogSigned, 3> sorted = terms;
    std::sort(sorted.begin(), sorted.end(), [](const LogSigned& x, const LogSigned& y) {
        if (x.sign == 0 || y.sign == 0) return x.sign != 0 && y.sign == 0;
        return x.log_abs > y.log_abs;
    });
    LogSigned sum = sorted[0] + sorted[1] + sorted[2];
    if (sorted[0].sign != 0 && (sum.sign == 0 || sum.log_abs < sorted[0].log_abs + std::log(kPsiClampRelative))) {
        cell.clamped = true;
        sum = {};
    }
    cell.value = sum.scaled(pref);
    return cell;
}

std::vector<std::vector<PsiCell>> psi_grid(int n, double t) {
    const LogFactorials lf(n + 1);
    std::vector<std::vector<PsiCell>> grid(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        for (int b = 0; 2 * b <= n - k; ++b) grid[static_cast<std::size_t>(k - 1)].push_back(psi_cell(n, b, k, t, lf));
    return grid;
}

PsiSums psi_sums_serial(int n, double t) {
    if (n < 1) throw std::invalid_argument("psi sums need n >= 1");
    const auto grid = psi_grid(n, t);
    PsiSums out;
    out.n = n;
    out.t = t;
    std::vector<LogSigned> all, weighted;
    out.per_k.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto& row = grid[static_cast<std::size_t>(k - 1)];
        std::vector<LogSigned> vals;
        vals.reserve(row.size());
        for (const auto& c : row) {
            ++out.cells;
            if (c.clamped) ++out.clamp_events;
            if (c.value.sign < 0) ++out.negative_cells;
            vals.push_back(c.value);
            all.push_back(c.value);
            weighted.push_back(c.value.scaled(std::log(static_cast<double>(k))));
        }
        out.per_k.push_back(log_sum(vals));
    }
    out.total = log_sum(all);
    out.k_weighted = log_sum(weighted);
    return out;
}

}  // namespace mfh::meanfield
