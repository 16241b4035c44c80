#include "sphmult/contraction.hpp"

#include <cmath>

namespace sphmult {

FlooredWeight floor_weight(double t, const CartanPoint& Z) {
    if (!(t >= 1.0)) throw std::domain_error("floor_weight: need t >= 1");
    FlooredWeight out;
    out.weight.coords.resize(Z.rank());
    out.frac.resize(Z.rank());
    for (int j = 0; j < Z.rank(); ++j) {
        double scaled = t * Z.coords[j];
        double fl = std::floor(scaled);
        out.weight.coords[j] = static_cast<long long>(fl);
        out.frac[j] = scaled - fl;
    }
    return out;
}

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 * (1.0 - x * x / 20.0);
    return std::sin(x) / x;
}

}  // namespace

double jacobian(const SymmetricSpaceModel& model, std::span<const double> X) {
    if (static_cast<int>(X.size()) != model.dim())
        throw std::invalid_argument("jacobian: expected full coordinates");
    double j = 1.0;
    for (int f = 0; f < model.rank(); ++f) {
        const auto& fac = model.factors()[f];
        double s = 0.0;
        for (int k = 0; k < fac.dim; ++k) {
            double v = X[model.factor_offset(f) + k];
            s += v * v;
        }
        double theta = std::sqrt(s);
        if (theta > M_PI + 1e-12) throw chart_error("jacobian: |X| exceeds chart radius pi");
        j *= std::pow(sinc(theta), fac.multiplicity);
    }
    return j;
}

double omega_radius(const SymmetricSpaceModel& model) { return model.chamber_radius(); }
double o_radius(const SymmetricSpaceModel& model) { return 0.5 * model.chamber_radius(); }

std::pair<double, double> change_of_variable_check(
    const SymmetricSpaceModel& model,
    const std::function<double(std::span<const double>)>& profile,
    double support_radius, int quad_order) {
    if (!(support_radius <= omega_radius(model) + 1e-12))
        throw chart_error("change_of_variable_check: profile support exceeds chart");

    const int r = model.rank();
    QuadratureRule rule = gauss_legendre(quad_order, 0.0, support_radius);

    // Tensor quadrature over the chamber box with two different weights.
    std::vector<std::size_t> idx(r, 0);
    std::vector<double> H(r);
    double lhs = 0.0, rhs = 0.0;
    const double c = model.measure_constant();
    for (;;) {
        double w = 1.0, surface = 1.0, chart = 1.0;
        for (int f = 0; f < r; ++f) {
            double theta = rule.nodes[idx[f]];
            H[f] = theta;
            w *= rule.weights[idx[f]];
            const int m = model.factors()[f].multiplicity;
            surface *= std::pow(std::sin(theta), m);
            chart *= std::pow(sinc(theta), m) * std::pow(theta, m);
        }
        double v = profile(H);
        lhs += w * v * surface;
        rhs += w * v * chart;
        int f = 0;
        while (f < r && ++idx[f] == rule.size()) idx[f++] = 0;
        if (f == r) break;
    }
    return {c * lhs, c * rhs};
}

}  // namespace sphmult
