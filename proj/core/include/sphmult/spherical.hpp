#pragma once

#include "sphmult/model.hpp"
#include "sphmult/report.hpp"

#include <span>
#include <vector>

namespace sphmult {

// A point of the space in its concrete embedding: unit vector in R^{d+1}
// per sphere factor, unit quaternion (as a 4-vector) for su2, factors
// concatenated. Block f starts at embedding_offset(f) and has length
// factors()[f].dim + 1.
struct SpacePoint {
    const SymmetricSpaceModel* model = nullptr;
    std::vector<double> embedding;
};

// pi(exp X). Accepts chamber coordinates (rank-sized, lifted along each
// factor's first axis) or full coordinates (dim-sized). Throws chart_error
// when a factor block has |X_f| > pi.
SpacePoint exp_point(const SymmetricSpaceModel& model, std::span<const double> X);

// Spherical function phi_lambda at the radial point H (chamber coords).
// Sphere factors evaluate the normalized Gegenbauer C_n^{(d-1)/2}(cos
// theta); su2 evaluates the normalized character sin((n+1)theta) /
// ((n+1) sin theta); products multiply. phi(w, 0) = 1 and |phi| <= 1.
double phi(const SymmetricSpaceModel& model, const WeightPoint& w, const CartanPoint& H);

// Single rank-one factor of phi at a radial angle. The transference
// quadratures reduce per factor and consume this directly.
double phi_factor(const RankOneFactor& f, long long n, double theta);

// phi_lambda(exp(Y) exp(X)) for full coordinates X, Y, via two-point
// homogeneity: per factor, phi at the invariant angle between
// exp_point(-Y_f) and exp_point(X_f).
double phi_pair(const SymmetricSpaceModel& model, const WeightPoint& w,
                std::span<const double> X, std::span<const double> Y);

// Generalized Bessel kernel: the K-orbit average of e^{iB(Z, Ad(k)X)}.
// Rank-one factors reduce to the normalized Bessel function of order
// (D_f - 2)/2 at z_f |X_f|; products multiply. Entire in X, |J| <= 1,
// J(Z, 0) = 1.
double gen_bessel(const SymmetricSpaceModel& model, const CartanPoint& Z,
                  std::span<const double> X);

// Contraction limit of spherical functions: for each t in the grid,
//   e(t) = | phi_pair([tZ], X/t, Y/t) - gen_bessel(Z, X + Y) |,
// with the fitted log-log slope. Passes when the errors sit at the
// numerical floor, or strictly decrease with slope inside
// [slope_lo, slope_hi].
ConvergenceReport lemma_limit_check(const SymmetricSpaceModel& model,
                                    const CartanPoint& Z,
                                    std::span<const double> X,
                                    std::span<const double> Y,
                                    std::span<const double> t_grid,
                                    double slope_lo = -1.3,
                                    double slope_hi = -0.7);

}  // namespace sphmult
