#include "sphmult/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace sphmult {

bool ConvergenceReport::errors_strictly_decreasing() const {
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i] < errors[i - 1])) return false;
    return true;
}

double fit_loglog_slope(std::span<const double> t, std::span<const double> e, double floor) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < t.size() && i < e.size(); ++i) {
        if (!(e[i] > floor)) continue;
        double x = std::log(t[i]);
        double y = std::log(e[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string report_to_csv(const ConvergenceReport& r) {
    std::string out = "t,error,estimate\n";
    for (std::size_t i = 0; i < r.t.size(); ++i) {
        out += format_double(r.t[i]);
        out += ',';
        out += i < r.errors.size() ? format_double(r.errors[i]) : "";
        out += ',';
        out += i < r.values.size() ? format_double(r.values[i]) : "";
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << contents;
}

}  // namespace sphmult
