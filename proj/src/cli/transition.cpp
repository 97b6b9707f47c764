#include <algorithm>
#include <cmath>
#include <map>

#include "mfh/cli.hpp"

namespace mfh::cli {

TransitionSummary summarize_transition(const std::vector<int>& ns, const std::vector<CurveRow>& rows) {
    if (ns.size() < 2) throw UsageError("n-list needs at least two values");
    std::map<double, std::map<int, double>> by_tau;
    for (const auto& r : rows) by_tau[r.tau][r.n] = r.m2_over_n2;

    TransitionSummary s;
    s.ns = ns;
    double mean_x = 0.0;
    for (int n : ns) mean_x += std::log(static_cast<double>(n));
    mean_x /= static_cast<double>(ns.size());

    for (const auto& [tau, vals] : by_tau) {
        TransitionLine line;
        line.tau = tau;
        for (int n : ns) {
            auto it = vals.find(n);
            if (it == vals.end()) throw UsageError("missing row for n=" + std::to_string(n));
            line.m2_over_n2.push_back(it->second);
        }
        double sxy = 0.0, sxx = 0.0, mean_y = 0.0;
        for (double v : line.m2_over_n2) mean_y += std::log(v);
        mean_y /= static_cast<double>(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double dx = std::log(static_cast<double>(ns[i])) - mean_x;
            sxy += dx * (std::log(line.m2_over_n2[i]) - mean_y);
            sxx += dx * dx;
        }
        line.slope = sxx > 0.0 ? sxy / sxx : 0.0;
        line.strictly_decreasing = true;
        for (std::size_t i = 1; i < ns.size(); ++i)
            if (!(ns[i] > ns[i - 1] ? line.m2_over_n2[i] < line.m2_over_n2[i - 1]
                                    : line.m2_over_n2[i] > line.m2_over_n2[i - 1]))
                line.strictly_decreasing = false;
        const auto [lo, hi] = std::minmax_element(line.m2_over_n2.begin(), line.m2_over_n2.end());
        line.spread = *hi / *lo - 1.0;
        line.subcritical = line.slope < kCriticalSlope;
        s.lines.push_back(std::move(line));
    }

    for (std::size_t i = 1; i < s.lines.size() && !s.tau_hat; ++i) {
        const auto& a = s.lines[i - 1];
        const auto& b = s.lines[i];
        const double fa = a.slope - kCriticalSlope, fb = b.slope - kCriticalSlope;
        if (fa == 0.0) s.tau_hat = a.tau;
        else if (fa < 0.0 && fb >= 0.0) s.tau_hat = a.tau + (b.tau - a.tau) * (-fa) / (fb - fa);
    }
    return s;
}

}  // namespace mfh::cli
