#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfh::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

/// Bad flags or malformed input files; maps to exit 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full dispatcher used by the mfh binary.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// --threads, then MF_THREADS, then the machine.
int resolve_threads(std::optional<int> flag);

// ---- curve -----------------------------------------------------------------

struct CurveRow {
    int n = 0;
    double t = 0.0;
    double tau = 0.0;
    double log_Z = 0.0;
    double m2 = 0.0;
    double m2_over_n = 0.0;
    double m2_over_n2 = 0.0;
};

inline constexpr const char* kCurveHeader = "n,t,tau,log_Z,m2,m2_over_n,m2_over_n2";
inline constexpr int kMaxExactCurveN = 12;

/// steps evenly spaced tau values in [tau_min, tau_max]; steps == 1 gives tau_min.
std::vector<double> tau_grid(double tau_min, double tau_max, int steps);
CurveRow curve_point(int n, double tau, bool exact, bool parallel);
std::vector<CurveRow> compute_curve(int n, const std::vector<double>& taus, bool exact, bool parallel);
void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows);
/// Throws UsageError on a bad header, a malformed row or no data rows.
std::vector<CurveRow> parse_curve_csv(std::istream& is);

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    int max_n = 7;
    bool full = false;
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    double seconds = 0.0;
    std::string counterexample;  // first failure, empty when passed
};

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

// ---- transition ------------------------------------------------------------

struct TransitionLine {
    double tau = 0.0;
    std::vector<double> m2_over_n2;  // one per n, in n-list order
    double slope = 0.0;              // least-squares d log(m2/n^2) / d log n
    bool strictly_decreasing = false;
    double spread = 0.0;             // max / min - 1
    bool subcritical = false;        // slope < -1/2
};

struct TransitionSummary {
    std::vector<int> ns;
    std::vector<TransitionLine> lines;
    std::optional<double> tau_hat;
};

/// Critical scaling m^2 ~ n^{3/2} puts the slope at -1/2; tau_hat is where
/// the slope crosses it, by linear interpolation between grid points.
inline constexpr double kCriticalSlope = -0.5;

TransitionSummary summarize_transition(const std::vector<int>& ns, const std::vector<CurveRow>& rows);

// ---- svg -------------------------------------------------------------------

std::string render_svg(const std::vector<CurveRow>& rows);

}  // namespace mfh::cli
