#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mfh/cli.hpp"
#include "mfh/meanfield.hpp"

namespace mfh::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_double(const std::string& field, int line_no) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || field.empty())
        throw UsageError("line " + std::to_string(line_no) + ": not a number: '" + field + "'");
    return v;
}

}  // namespace

std::vector<double> tau_grid(double tau_min, double tau_max, int steps) {
    if (steps < 1) throw UsageError("steps must be >= 1");
    if (!std::isfinite(tau_min) || !std::isfinite(tau_max) || tau_min < 0.0)
        throw UsageError("tau range must be finite and nonnegative");
    if (steps == 1) {
        if (tau_max < tau_min) throw UsageError("tau-min must not exceed tau-max");
        return {tau_min};
    }
    if (!(tau_min < tau_max)) throw UsageError("tau-min must be < tau-max when steps > 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out.push_back(tau_min + (tau_max - tau_min) * i / (steps - 1));
    return out;
}

CurveRow curve_point(int n, double tau, bool exact, bool parallel) {
    CurveRow r;
    r.n = n;
    r.tau = tau;
    r.t = tau / n;
    if (exact) {
        const QPoly z = meanfield::partition_function_exact(n);
        const QRatio m2 = meanfield::magnetisation_sq_exact(n);
        r.log_Z = static_cast<double>(std::log(z.eval(r.t)));
        r.m2 = static_cast<double>(m2.eval(r.t));
    } else {
        const auto p = meanfield::evaluate_point(n, r.t, parallel ? meanfield::Kernel::Parallel : meanfield::Kernel::Serial);
        r.log_Z = p.log_Z;
        r.m2 = p.m2;
    }
    r.m2_over_n = r.m2 / n;
    r.m2_over_n2 = r.m2 / (static_cast<double>(n) * n);
    return r;
}

std::vector<CurveRow> compute_curve(int n, const std::vector<double>& taus, bool exact, bool parallel) {
    if (n < 2) throw UsageError("n must be >= 2");
    if (exact && n > kMaxExactCurveN) throw UsageError("--exact supports n <= 12");
    std::vector<CurveRow> rows;
    rows.reserve(taus.size());
    for (double tau : taus) rows.push_back(curve_point(n, tau, exact, parallel));
    return rows;
}

void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << kCurveHeader << '\n';
    for (const auto& r : rows)
        os << r.n << ',' << fmt(r.t) << ',' << fmt(r.tau) << ',' << fmt(r.log_Z) << ',' << fmt(r.m2) << ','
           << fmt(r.m2_over_n) << ',' << fmt(r.m2_over_n2) << '\n';
}

std::vector<CurveRow> parse_curve_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw UsageError("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCurveHeader) throw UsageError("unexpected CSV header: '" + line + "'");
    std::vector<CurveRow> rows;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 7) throw UsageError("line " + std::to_string(line_no) + ": expected 7 fields");
        CurveRow r;
        const double n = parse_double(f[0], line_no);
        if (n < 1 || n != std::floor(n)) throw UsageError("line " + std::to_string(line_no) + ": bad n");
        r.n = static_cast<int>(n);
        r.t = parse_double(f[1], line_no);
        r.tau = parse_double(f[2], line_no);
        r.log_Z = parse_double(f[3], line_no);
        r.m2 = parse_double(f[4], line_no);
        r.m2_over_n = parse_double(f[5], line_no);
        r.m2_over_n2 = parse_double(f[6], line_no);
        rows.push_back(r);
    }
    if (rows.empty()) throw UsageError("CSV has no data rows");
    return rows;
}

}  // namespace mfh::cli
