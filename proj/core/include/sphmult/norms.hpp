#pragma once

#include "sphmult/fourier.hpp"
#include "sphmult/model.hpp"
#include "sphmult/transfer.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sphmult {

enum class NormKind { exact, lower_bound };

struct NormEstimate {
    double p = 2.0;
    double value = 0.0;
    NormKind kind = NormKind::lower_bound;
    std::string witness;  // extremizing trial, when kind == lower_bound
};

// Exact L^2 multiplier norm: sup of |symbol| over the supplied table.
// Throws std::domain_error on an empty table.
NormEstimate l2_norm(std::span<const double> symbol_values);
NormEstimate l2_norm(const std::function<double(const CartanPoint&)>& symbol,
                     std::span<const CartanPoint> grid);

struct LpFlatOptions {
    int z_order = 240;        // quadrature nodes per spectral axis
    int theta_order = 200;    // quadrature nodes per chamber axis
    double window_mult = 3.0; // output window as a multiple of trial support
    double tail_threshold = 1e-10;
    double zmax_cap = 400.0;
};

// Empirical lower bound for the flat-side multiplier norm ||T_m||_{p,p},
// restricted to Ad(K)-invariant trials: max over trials of
// ||inverse(m * forward(f))||_p / ||f||_p with L^p chamber-quadrature norms
// carrying the polar density weight. Valid lower bound for every window and
// node count.
NormEstimate lp_lower_bound_flat(const SymmetricSpaceModel& model,
                                 const std::function<double(const CartanPoint&)>& symbol,
                                 double p, std::span<const RadialFunction> trials,
                                 const LpFlatOptions& opt = {});

// Zonal trial for the compact side: coefficients a_n of
// f = sum_n a_n d_n phi_n over the weight lattice cut at degree_cut per
// axis (flattened in row-major order for rank >= 2).
struct ZonalTrial {
    std::vector<double> coefficients;
    std::string name;
};

// Empirical lower bound for the spherical multiplier norm, using the
// diagonal action T f = sum a_n d_n m(lambda_n) phi_n on zonal trials and
// surface-measure L^p norms over the full chamber [0, pi]^r.
NormEstimate lp_lower_bound_spherical(const SymmetricSpaceModel& model,
                                      const std::function<double(const WeightPoint&)>& symbol,
                                      double p, int degree_cut,
                                      std::span<const ZonalTrial> trials, int theta_order = 200);

// Deterministic default trial sets.
std::vector<RadialFunction> default_flat_trials(const SymmetricSpaceModel& model);
std::vector<ZonalTrial> default_zonal_trials(int degree_cut);

// Both sides of the transference inequality, empirically: flat-side lower
// bound for xi acting by convolution, spherical-side lower bounds for the
// backward family m_t, and at p = 2 the symbol-sup comparison
// |sup_z |xi_hat| - sup_z |m_t|| over the z grid at the largest t.
struct TransferenceNormReport {
    double p = 2.0;
    NormEstimate flat;
    std::vector<double> t;
    std::vector<NormEstimate> spherical;
    std::vector<double> ratio;  // flat.value / spherical[i].value
    // p == 2 diagnostics
    double sup_flat_symbol = 0.0;
    std::vector<double> sup_mt;
    double p2_gap = 0.0;
    bool p2_pass = false;
    std::string note;
};

TransferenceNormReport transference_norm_report(
    const SymmetricSpaceModel& model, const RadialFunction& xi, double p,
    std::span<const double> t_grid, std::span<const double> z_grid,
    std::span<const RadialFunction> trials, int degree_cut = 12,
    const BackwardQuad& bquad = {}, const LpFlatOptions& opt = {}, double p2_tol = 1e-2);

}  // namespace sphmult
