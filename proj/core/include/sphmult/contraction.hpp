#pragma once

#include "sphmult/model.hpp"
#include "sphmult/special.hpp"

#include <functional>
#include <span>
#include <utility>

namespace sphmult {

// Integer part [tZ] of a scaled chamber point together with the fractional
// remainder, so that weight + frac reconstructs t*Z exactly.
struct FlooredWeight {
    WeightPoint weight;
    std::vector<double> frac;  // each in [0,1)
};

// Componentwise floor of t*Z. Ties (t*Z exactly integral) take the exact
// integer.
FlooredWeight floor_weight(double t, const CartanPoint& Z);

// Jacobian of the exponential chart at full coordinates X:
// prod over factors of (sin|X_f| / |X_f|)^{m_f}. Value in (0,1] on the
// chart; throws chart_error when some |X_f| > pi.
double jacobian(const SymmetricSpaceModel& model, std::span<const double> X);

// Radius of the chart neighbourhood Omega (open ball per factor) and of the
// centered neighbourhood O used by the backward construction; O has half the
// radius so O + O stays inside Omega.
double omega_radius(const SymmetricSpaceModel& model);
double o_radius(const SymmetricSpaceModel& model);

// Evaluates both realizations of the change-of-variable identity for a
// radial profile f supported inside the chart:
//   first  = integral of f over the image of the chart, via the zonal
//            surface measure (sphere factors: sin^{d-1} weight),
//   second = chart integral of f(exp .) J against Lebesgue measure reduced
//            to the chamber.
// The two agree up to quadrature error; they are computed through disjoint
// code paths on purpose.
std::pair<double, double> change_of_variable_check(
    const SymmetricSpaceModel& model,
    const std::function<double(std::span<const double>)>& profile,
    double support_radius, int quad_order = 200);

}  // namespace sphmult
