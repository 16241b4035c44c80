#pragma once

#include <span>
#include <string>
#include <vector>

namespace sphmult {

// Result of a deformation-limit experiment: per-t errors against a target,
// the fitted log-log rate, and a pass flag against the declared criteria.
struct ConvergenceReport {
    std::vector<double> t;
    std::vector<double> errors;   // aligned with t, each >= 0
    std::vector<double> values;   // value estimate at each t (optional)
    double slope = 0.0;           // NaN when fewer than 2 usable points
    double limit_estimate = 0.0;
    bool pass = false;
    std::string note;

    bool errors_strictly_decreasing() const;
};

// Least-squares slope of log(e) against log(t), ignoring errors at or below
// `floor` (default 1e-12) so numerical noise is not fitted. NaN when fewer
// than two points survive.
double fit_loglog_slope(std::span<const double> t, std::span<const double> e,
                        double floor = 1e-12);

// CSV with header "t,error,estimate", one row per grid point, '.'-decimal,
// locale-independent, %.17g. Returns the file contents that were written.
std::string report_to_csv(const ConvergenceReport& r);
void write_text_file(const std::string& path, const std::string& contents);

// Deterministic %.17g formatting used by every CSV/JSON emitter.
std::string format_double(double v);

}  // namespace sphmult
