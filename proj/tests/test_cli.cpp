#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "mfh/cli.hpp"

using namespace mfh::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "mfh");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
    return c;
}

}  // namespace

TEST(Curve, TrivialPoint) {
    const auto r = invoke({"curve", "--n", "3", "--tau-min", "0", "--tau-max", "0", "--steps", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream is(r.out);
    const auto rows = parse_curve_csv(is);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].m2, 3.0);
    EXPECT_NEAR(rows[0].log_Z, std::log(8.0), 1e-11);
}

TEST(Curve, TwoSpinClosedForm) {
    const auto r = invoke({"curve", "--n", "2", "--tau-min", "2", "--tau-max", "2", "--steps", "1"});
    ASSERT_EQ(r.code, 0);
    std::istringstream is(r.out);
    const auto rows = parse_curve_csv(is);
    EXPECT_NEAR(rows[0].t, 1.0, 0);
    EXPECT_NEAR(rows[0].m2, 8 / (3 + std::exp(-2.0)), 1e-10);
}

TEST(Curve, HeaderRowsAndOrder) {
    const auto r = invoke({"curve", "--n", "40", "--tau-min", "0.5", "--tau-max", "4", "--steps", "8", "--threads", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), kCurveHeader);
    std::istringstream is(r.out);
    const auto rows = parse_curve_csv(is);
    ASSERT_EQ(rows.size(), 8u);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].tau, rows[i].tau);
}

TEST(Curve, ExactMatchesFloat) {
    const auto f = invoke({"curve", "--n", "6", "--tau-min", "0.5", "--tau-max", "3", "--steps", "4"});
    const auto e = invoke({"curve", "--n", "6", "--tau-min", "0.5", "--tau-max", "3", "--steps", "4", "--exact"});
    ASSERT_EQ(f.code, 0);
    ASSERT_EQ(e.code, 0);
    std::istringstream fi(f.out), ei(e.out);
    const auto fr = parse_curve_csv(fi), er = parse_curve_csv(ei);
    for (std::size_t i = 0; i < fr.size(); ++i) EXPECT_NEAR(fr[i].m2, er[i].m2, 1e-9 * er[i].m2);
}

TEST(Curve, SerialRunsAreByteIdentical) {
    const std::vector<std::string> args{"curve", "--n", "300", "--tau-min", "0.5", "--tau-max", "3.5", "--steps", "5",
                                        "--threads", "1"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    auto par = args;
    par.back() = "4";
    EXPECT_EQ(invoke(par).out, invoke(par).out);
}

TEST(Curve, BadFlags) {
    EXPECT_EQ(invoke({"curve", "--n", "1", "--tau-min", "0", "--tau-max", "1", "--steps", "2"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--n", "5", "--tau-min", "2", "--tau-max", "1", "--steps", "2"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--n", "5", "--tau-min", "0", "--tau-max", "1", "--steps", "0"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--n", "20", "--tau-min", "0", "--tau-max", "1", "--steps", "2", "--exact"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--n", "5", "--tau-min", "0", "--tau-max", "1", "--steps", "2", "--threads", "0"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--n", "five"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(Threads, Resolution) {
    EXPECT_EQ(resolve_threads(3), 3);
    ::setenv("MF_THREADS", "5", 1);
    EXPECT_EQ(resolve_threads(std::nullopt), 5);
    ::setenv("MF_THREADS", "zero", 1);
    EXPECT_THROW(resolve_threads(std::nullopt), UsageError);
    ::unsetenv("MF_THREADS");
    EXPECT_GE(resolve_threads(std::nullopt), 1);
}

TEST(Verify, SmallRunPasses) {
    const auto r = invoke({"verify", "--max-n", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("triple-route"), std::string::npos);
    EXPECT_EQ(count(r.out, "FAIL"), 0u);
}

TEST(Verify, RejectsLargeN) {
    const auto r = invoke({"verify", "--max-n", "9"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("max-n must be ≤ 8"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--level", "medium"}).code, 2);
}

#ifdef MFH_FAULT_INJECTION
TEST(Verify, InjectedFaultFlipsExitCode) {
    const auto r = invoke({"verify", "--max-n", "4", "--inject-fault"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("n=4 k=1"), std::string::npos);
    EXPECT_NE(r.err.find("exponent=1"), std::string::npos);
}
#endif

TEST(Simulate, Report) {
    const auto r = invoke({"simulate", "--n", "2", "--tau", "2", "--samples", "100000", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::regex fix(R"(\nfix,([^,]+),([^,]+),([^,]+),([^,\n]+)\n)");
    std::smatch m;
    ASSERT_TRUE(std::regex_search(r.out, m, fix));
    EXPECT_NEAR(std::stod(m[3]), 1 + std::exp(-2.0), 1e-9);
    EXPECT_LE(std::fabs(std::stod(m[4])), 3.0);
}

TEST(Simulate, BadFlags) {
    EXPECT_EQ(invoke({"simulate", "--n", "5", "--tau", "1", "--samples", "10"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--n", "5", "--tau", "-1", "--samples", "10000"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--n", "5", "--tau", "1", "--samples", "10000", "--k-max", "9"}).code, 2);
}

TEST(Transition, SummaryAndCrossing) {
    std::vector<CurveRow> rows;
    const std::vector<int> ns{100, 200, 400};
    for (double tau : {1.0, 1.5, 2.5, 3.0})
        for (int n : ns) rows.push_back(curve_point(n, tau, false, false));
    const auto s = summarize_transition(ns, rows);
    ASSERT_EQ(s.lines.size(), 4u);
    EXPECT_TRUE(s.lines[0].subcritical);
    EXPECT_TRUE(s.lines[0].strictly_decreasing);
    EXPECT_FALSE(s.lines[3].subcritical);
    ASSERT_TRUE(s.tau_hat.has_value());
    EXPECT_GT(*s.tau_hat, 1.5);
    EXPECT_LT(*s.tau_hat, 2.5);
    EXPECT_THROW(summarize_transition({100}, rows), UsageError);
}

TEST(Transition, Command) {
    const auto r = invoke({"transition", "--n-list", "60,120", "--tau-min", "1", "--tau-max", "3", "--steps", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("tau_hat,"), std::string::npos);
    EXPECT_EQ(invoke({"transition", "--n-list", "60", "--tau-min", "1", "--tau-max", "3", "--steps", "3"}).code, 2);
    EXPECT_EQ(invoke({"transition", "--n-list", "60,x", "--tau-min", "1", "--tau-max", "3", "--steps", "3"}).code, 2);
}

TEST(Csv, RoundTripAndErrors) {
    std::vector<CurveRow> rows{curve_point(10, 0.5, false, false), curve_point(10, 1.5, false, false)};
    std::ostringstream os;
    write_curve_csv(os, rows);
    std::istringstream is(os.str());
    const auto back = parse_curve_csv(is);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_NEAR(back[1].m2, rows[1].m2, 1e-11 * rows[1].m2);

    std::istringstream empty(std::string(kCurveHeader) + "\n");
    EXPECT_THROW(parse_curve_csv(empty), UsageError);
    std::istringstream bad_header("n,t\n1,2\n");
    EXPECT_THROW(parse_curve_csv(bad_header), UsageError);
    std::istringstream bad_row(std::string(kCurveHeader) + "\n3,0,0,abc,3,1,0.3\n");
    EXPECT_THROW(parse_curve_csv(bad_row), UsageError);
    std::istringstream short_row(std::string(kCurveHeader) + "\n3,0,0\n");
    EXPECT_THROW(parse_curve_csv(short_row), UsageError);
}

TEST(Svg, OnePolylinePerN) {
    std::vector<CurveRow> rows;
    for (int n : {20, 40})
        for (double tau : {0.5, 1.5, 2.5, 3.5}) rows.push_back(curve_point(n, tau, false, false));
    const std::string svg = render_svg(rows);
    EXPECT_EQ(count(svg, "<polyline"), 2u);
    EXPECT_EQ(count(svg, "stroke-dasharray"), 1u);
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
    EXPECT_EQ(svg.find("http://www.w3.org/2000/svg"), svg.find("xmlns=\"") + 7);
}

TEST(Svg, SingleRowGetsMarker) {
    const std::string svg = render_svg({curve_point(5, 1.0, false, false)});
    EXPECT_EQ(count(svg, "<polyline"), 1u);
    EXPECT_EQ(count(svg, "<circle"), 1u);
    EXPECT_THROW(render_svg({}), UsageError);
}
