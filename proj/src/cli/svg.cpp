#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mfh/cli.hpp"

namespace mfh::cli {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 70, kRight = 150, kTop = 30, kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<CurveRow>& rows) {
    if (rows.empty()) throw UsageError("no data to plot");
    std::map<int, std::vector<std::pair<double, double>>> series;
    for (const auto& r : rows) series[r.n].emplace_back(r.tau, r.m2_over_n2);
    for (auto& [n, pts] : series) std::sort(pts.begin(), pts.end());

    // tau = 2 is always inside the x range so the reference line is drawn.
    double x0 = 2.0, x1 = 2.0, y1 = 0.0;
    for (const auto& r : rows) {
        x0 = std::min(x0, r.tau);
        x1 = std::max(x1, r.tau);
        y1 = std::max(y1, r.m2_over_n2);
    }
    if (x1 - x0 < 1e-9) x1 = x0 + 1.0;
    if (x1 == 2.0) x1 += 0.1 * (x1 - x0);
    if (x0 == 2.0) x0 -= 0.1 * (x1 - x0);
    y1 = y1 > 0.0 ? y1 * 1.05 : 1.0;
    const double y0 = 0.0;
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes and ticks.
    os << "<g stroke=\"black\" stroke-width=\"1\">\n"
       << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
       << num(kTop + ph) << "\"/>\n"
       << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
       << num(kTop + ph) << "\"/>\n";
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double xv = x0 + (x1 - x0) * i / ticks, yv = y0 + (y1 - y0) * i / ticks;
        os << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(px(xv)) << "\" y2=\""
           << num(kTop + ph + 5) << "\"/>\n"
           << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
           << num(py(yv)) << "\"/>\n";
    }
    os << "</g>\n<g fill=\"black\">\n";
    for (int i = 0; i <= ticks; ++i) {
        const double xv = x0 + (x1 - x0) * i / ticks, yv = y0 + (y1 - y0) * i / ticks;
        os << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
           << label(xv) << "</text>\n"
           << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(yv) + 4) << "\" text-anchor=\"end\">" << label(yv)
           << "</text>\n";
    }
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10)
       << "\" text-anchor=\"middle\">tau = t n</text>\n"
       << "<text transform=\"translate(16 " << num(kTop + ph / 2)
       << ") rotate(-90)\" text-anchor=\"middle\">m2 / n^2</text>\n</g>\n";

    // Reference line at the critical tau.
    os << "<line x1=\"" << num(px(2.0)) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(px(2.0)) << "\" y2=\""
       << num(kTop + ph) << "\" stroke=\"#555555\" stroke-dasharray=\"6 4\"/>\n";

    std::size_t idx = 0;
    for (const auto& [n, pts] : series) {
        const char* color = kPalette[idx % std::size(kPalette)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            os << (i ? " " : "") << num(px(pts[i].first)) << ',' << num(py(pts[i].second));
        os << "\"/>\n";
        if (pts.size() == 1)
            os << "<circle cx=\"" << num(px(pts[0].first)) << "\" cy=\"" << num(py(pts[0].second)) << "\" r=\"4\" fill=\""
               << color << "\"/>\n";
        const double ly = kTop + 16.0 * static_cast<double>(idx + 1);
        os << "<line x1=\"" << num(kLeft + pw + 15) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(kLeft + pw + 35)
           << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n"
           << "<text x=\"" << num(kLeft + pw + 40) << "\" y=\"" << num(ly) << "\">n = " << n << "</text>\n";
        ++idx;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace mfh::cli
