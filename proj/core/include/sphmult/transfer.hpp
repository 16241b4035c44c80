#pragma once

#include "sphmult/contraction.hpp"
#include "sphmult/fourier.hpp"
#include "sphmult/model.hpp"
#include "sphmult/report.hpp"

#include <functional>
#include <string>

namespace sphmult {

// A family of spherical multipliers t -> m_t, evaluated at class-1 weights.
struct MultiplierFamily {
    std::function<double(double t, const WeightPoint& w)> eval;
    std::string name;
    std::string note;
};

// Limit m(Z) = lim_t m_t([tZ]) along the grid. The limit estimate is the
// last value; errors are successive deviations |v(t_{i+1}) - v(t_i)|
// attached to the left grid point. Non-convergence is reported through the
// pass flag, never thrown.
ConvergenceReport forward_limit(const SymmetricSpaceModel& model, const MultiplierFamily& fam,
                                const CartanPoint& Z, std::span<const double> t_grid);

// The dilation family m_t(lambda) = m(H_lambda / t) of a continuous bounded
// chamber function.
MultiplierFamily dilation_family(const SymmetricSpaceModel& model,
                                 std::function<double(const CartanPoint&)> m,
                                 std::string name = "dilation");
MultiplierFamily dilation_family(const SymmetricSpaceModel& model, const RadialFunction& m);

// Pointwise product with the Gaussian regularizer exp(-eps ||lambda||^2 /
// t^2). Along floored arguments the result obeys
// |m_{t,eps}([tZ])| <= C1 exp(-(eps/2) ||Z||^2) once t >= 2/eps.
MultiplierFamily gaussian_regularize(const MultiplierFamily& fam, double eps);

// Quadrature orders for the backward double integral (all Gauss-Legendre).
struct BackwardQuad {
    int w_order = 64;      // radial nodes for the outer W ball
    int x_order = 64;      // radial nodes for the inner X integral
    int angle_order = 64;  // orbit-angle nodes
};

// m_t(lambda_[tZ]) of the backward construction:
//   (1/mu(O)) int_O int_O phi_{lambda_t}(exp(-(X+W)/t) exp(W/t)) xi(X) dX dW
// with O the centered ball of half the chamber radius per factor and mu(O)
// computed by the same quadrature stack. xi must be supported inside O.
double backward_mt(const SymmetricSpaceModel& model, const RadialFunction& xi, double t,
                   const CartanPoint& Z, const BackwardQuad& quad = {});

// e(t) = |backward_mt(t, Z) - xi_hat(Z)| along the grid, with slope fit and
// pass flag. Passes when the errors sit at the quadrature floor (the Z = 0
// identity), or strictly decrease with slope inside [slope_lo, slope_hi].
ConvergenceReport backward_limit_check(const SymmetricSpaceModel& model, const RadialFunction& xi,
                                       const CartanPoint& Z, std::span<const double> t_grid,
                                       const BackwardQuad& quad = {}, int fourier_order = 200,
                                       double slope_lo = -1.3, double slope_hi = -0.7);

}  // namespace sphmult
