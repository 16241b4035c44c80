#pragma once

#include "sphmult/model.hpp"
#include "sphmult/special.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sphmult {

// Ad(K)-invariant function given by its chamber profile: a closed-form
// evaluator or a uniformly sampled grid per chamber axis, plus the support
// radius. Evaluates to 0 outside the support box.
class RadialFunction {
public:
    using Evaluator = std::function<double(std::span<const double>)>;

    RadialFunction() = default;

    static RadialFunction from_evaluator(int rank, std::vector<double> axis_support,
                                         Evaluator f, std::string description);
    static RadialFunction from_evaluator1d(double support_radius,
                                           std::function<double(double)> f,
                                           std::string description);
    // Uniform samples on [0, support_radius] (rank one), cubic interpolation
    // between samples.
    static RadialFunction from_samples(std::vector<double> values, double support_radius,
                                       std::string description);
    // CSV with a mandatory header row and two columns: radius,value. Radii
    // must form a uniform grid starting at 0.
    static RadialFunction from_csv(const std::string& path);
    // Tensor product of two profiles on a product chamber.
    static RadialFunction tensor(const RadialFunction& a, const RadialFunction& b);

    double operator()(std::span<const double> H) const;
    double value1d(double theta) const;

    int rank() const { return rank_; }
    double support_radius() const;  // max over axes
    const std::vector<double>& axis_support() const { return axis_support_; }
    const std::string& description() const { return description_; }

    bool is_tensor() const { return !tensor_factors_.empty(); }
    const std::vector<RadialFunction>& tensor_factors() const { return tensor_factors_; }

    RadialFunction scaled(double c) const;  // c * f, same support

private:
    int rank_ = 0;
    std::vector<double> axis_support_;
    Evaluator eval_;
    std::string description_;
    std::vector<RadialFunction> tensor_factors_;
};

// Profile factories used by tests, default trials and the CLI.
RadialFunction make_gaussian_profile(double sigma, double cutoff_sigmas = 6.5);
RadialFunction make_modulated_gaussian(double sigma, double k, double cutoff_sigmas = 6.5);
// Polynomial bump (1 - (theta/radius)^2)^flatness on [0, radius]: C^{k-1}
// at the edge, transform decays like z^{-(k+2)}, so truncated inversion
// converges quickly.
RadialFunction make_smooth_bump(double radius, int flatness = 8);

// Tabulated radial Fourier transform of one profile:
//   xi_hat(Z) = c_model * int_chamber xi(H) J(Z, H) density(H) dH,
// with c_model the model's polar measure constant, so that xi_hat is the
// honest Lebesgue Fourier transform of the invariant extension of xi.
class ForwardTransform {
public:
    ForwardTransform(const SymmetricSpaceModel& model, const RadialFunction& xi,
                     int order = 200);
    double at(const CartanPoint& Z) const;
    double mass() const;  // xi_hat(0)

private:
    const SymmetricSpaceModel* model_;
    std::vector<QuadratureRule> rules_;       // per axis
    std::vector<double> weighted_values_;     // xi * density * weights, flattened
    std::vector<int> dims_;
};

// Tabulated inverse transform of a (truncated) symbol profile:
//   f(X) = c_model / (2 pi)^D * int xhat(Z) J(X, Z) density(Z) dZ.
// The kernel is real and even, so the only difference from the forward
// direction is the (2 pi)^{-D} factor.
class InverseTransform {
public:
    InverseTransform(const SymmetricSpaceModel& model, const RadialFunction& xhat,
                     int order = 200);
    double at(const CartanPoint& X) const;

private:
    const SymmetricSpaceModel* model_;
    std::vector<QuadratureRule> rules_;
    std::vector<double> weighted_values_;
    std::vector<int> dims_;
};

// One-shot conveniences.
double fourier_transform(const SymmetricSpaceModel& model, const RadialFunction& xi,
                         const CartanPoint& Z, int order = 200);
double inverse_transform(const SymmetricSpaceModel& model, const RadialFunction& xhat,
                         const CartanPoint& X, int order = 200);

// Unit-mass rescaling: xi / xi_hat(0).
RadialFunction unit_mass(const SymmetricSpaceModel& model, const RadialFunction& xi,
                         int order = 200);

// Truncation radii for inverting the transform of xi: per axis, the smallest
// radius beyond which |xi_hat| * density stays under `threshold`, scanned in
// steps of 0.5 up to `cap`.
std::vector<double> choose_inverse_radius(const SymmetricSpaceModel& model,
                                          const RadialFunction& xi, int order = 200,
                                          double threshold = 1e-10, double cap = 400.0);

// xi_hat as a RadialFunction on [0, radius] per axis, backed by the
// tabulated forward transform (no sampling error).
RadialFunction transform_profile(const SymmetricSpaceModel& model, const RadialFunction& xi,
                                 std::vector<double> radius, int order = 200);

}  // namespace sphmult
