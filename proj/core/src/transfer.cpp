#include "sphmult/transfer.hpp"

#include "sphmult/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace sphmult {

ConvergenceReport forward_limit(const SymmetricSpaceModel& model, const MultiplierFamily& fam,
                                const CartanPoint& Z, std::span<const double> t_grid) {
    model.require_rank(Z.rank(), "forward_limit");
    if (t_grid.size() < 3 || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("forward_limit: need an increasing t grid with >= 3 points");

    std::vector<double> v;
    bool finite = true;
    for (double t : t_grid) {
        v.push_back(fam.eval(t, floor_weight(t, Z).weight));
        finite = finite && std::isfinite(v.back());
    }

    ConvergenceReport rep;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        rep.t.push_back(t_grid[i]);
        rep.values.push_back(v[i]);
        rep.errors.push_back(std::abs(v[i + 1] - v[i]));
    }
    rep.limit_estimate = v.back();
    rep.slope = fit_loglog_slope(rep.t, rep.errors);

    const double floor = 1e-12;
    rep.pass = true;
    if (!finite) {
        // unbounded-family values are reported, not thrown
        rep.pass = false;
        rep.note = "family produced non-finite values";
        return rep;
    }
    for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i) {
        if (rep.errors[i] <= floor && rep.errors[i + 1] <= floor) continue;
        if (rep.errors[i + 1] > rep.errors[i] * (1.0 + 1e-9) + floor) {
            rep.pass = false;
            rep.note = "successive deviations failed to decrease";
            break;
        }
    }
    return rep;
}

MultiplierFamily dilation_family(const SymmetricSpaceModel& model,
                                 std::function<double(const CartanPoint&)> m, std::string name) {
    const int r = model.rank();
    MultiplierFamily fam;
    fam.name = std::move(name);
    fam.eval = [m = std::move(m), r](double t, const WeightPoint& w) {
        std::vector<double> h(r);
        for (int j = 0; j < r; ++j) h[j] = static_cast<double>(w.coords[j]) / t;
        return m(CartanPoint(std::move(h)));
    };
    return fam;
}

MultiplierFamily dilation_family(const SymmetricSpaceModel& model, const RadialFunction& m) {
    auto f = [m](const CartanPoint& Z) { return m(Z.coords); };
    return dilation_family(model, f, "dilation[" + m.description() + "]");
}

MultiplierFamily gaussian_regularize(const MultiplierFamily& fam, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("gaussian_regularize: need eps > 0");
    MultiplierFamily out;
    out.name = fam.name + " * exp(-" + std::to_string(eps) + " |l|^2/t^2)";
    out.note = "decays along floored arguments: |m_{t,eps}([tZ])| <= C1 exp(-(eps/2)||Z||^2) for t >= " +
               std::to_string(2.0 / eps);
    out.eval = [inner = fam.eval, eps](double t, const WeightPoint& w) {
        double n2 = 0.0;
        for (long long c : w.coords) n2 += static_cast<double>(c) * static_cast<double>(c);
        return inner(t, w) * std::exp(-eps * n2 / (t * t));
    };
    return out;
}

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 * (1.0 - x * x / 20.0);
    return std::sin(x) / x;
}

// Invariant angle between exp((X+W)/t) and exp(W/t) for W = sigma e1 and
// X = rho (cos psi e1 + sin psi e2); the whole configuration lives in a
// 2-plane of the factor.
double pair_angle(double sigma, double rho, double psi, double t) {
    double a1 = (sigma + rho * std::cos(psi)) / t;
    double a2 = rho * std::sin(psi) / t;
    double na = std::hypot(a1, a2);
    double nb = sigma / t;
    double inner = std::cos(na) * std::cos(nb) + sinc(na) * a1 * std::sin(nb);
    return std::acos(std::clamp(inner, -1.0, 1.0));
}

}  // namespace

double backward_mt(const SymmetricSpaceModel& model, const RadialFunction& xi, double t,
                   const CartanPoint& Z, const BackwardQuad& quad) {
    model.require_rank(Z.rank(), "backward_mt");
    model.require_rank(xi.rank(), "backward_mt");
    if (!(t >= 1.0)) throw std::domain_error("backward_mt: need t >= 1");
    const int r = model.rank();
    for (int f = 0; f < r; ++f) {
        double ro = 0.5 * model.factors()[f].chamber_radius;
        if (xi.axis_support()[f] > ro + 1e-12)
            throw std::domain_error("backward_mt: xi must be supported inside O (radius " +
                                    std::to_string(ro) + ")");
    }

    const WeightPoint lambda = floor_weight(t, Z).weight;

    // Per factor: orbit-and-W-averaged spherical factor as a function of the
    // X radius, so the only cross-factor coupling left is through xi.
    std::vector<QuadratureRule> rho_rules(r);
    std::vector<std::vector<double>> T(r);
    double norm = 1.0;  // prod mu(O_f), same quadrature stack as the numerator
    for (int f = 0; f < r; ++f) {
        const auto& fac = model.factors()[f];
        const double ro = 0.5 * fac.chamber_radius;
        QuadratureRule srule = gauss_legendre(quad.w_order, 0.0, ro);
        QuadratureRule arule = gauss_legendre(quad.angle_order, 0.0, M_PI);
        rho_rules[f] = gauss_legendre(quad.x_order, 0.0, std::min(xi.axis_support()[f], ro));

        double mu = 0.0;
        for (std::size_t i = 0; i < srule.size(); ++i)
            mu += srule.weights[i] * std::pow(srule.nodes[i], fac.dim - 1);
        mu *= fac.sphere_area;
        norm *= mu;

        T[f].assign(rho_rules[f].size(), 0.0);
        for (std::size_t ix = 0; ix < rho_rules[f].size(); ++ix) {
            double rho = rho_rules[f].nodes[ix];
            double acc = 0.0;
            for (std::size_t iw = 0; iw < srule.size(); ++iw) {
                double sigma = srule.nodes[iw];
                double ws = srule.weights[iw] * std::pow(sigma, fac.dim - 1);
                for (std::size_t ia = 0; ia < arule.size(); ++ia) {
                    double psi = arule.nodes[ia];
                    double wa = arule.weights[ia] * std::pow(std::sin(psi), fac.dim - 2);
                    double ang = pair_angle(sigma, rho, psi, t);
                    acc += ws * wa * phi_factor(fac, lambda.coords[f], ang);
                }
            }
            T[f][ix] = acc * fac.sphere_area * fac.orbit_area;
        }
    }

    // Contract against xi over the X radial grid.
    double result = 0.0;
    std::vector<std::size_t> idx(r, 0);
    std::vector<double> H(r);
    for (;;) {
        double w = 1.0;
        for (int f = 0; f < r; ++f) {
            double rho = rho_rules[f].nodes[idx[f]];
            H[f] = rho;
            w *= rho_rules[f].weights[idx[f]] *
                 std::pow(rho, model.factors()[f].dim - 1) * T[f][idx[f]];
        }
        result += w * xi(H);
        int f = 0;
        while (f < r && ++idx[f] == rho_rules[f].size()) idx[f++] = 0;
        if (f == r) break;
    }
    result /= norm;

    // |phi| <= 1 forces |m_t| <= ||xi||_1; violation means broken quadrature.
    double l1 = 0.0;
    {
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            double w = 1.0;
            for (int f = 0; f < r; ++f) {
                H[f] = rho_rules[f].nodes[idx[f]];
                w *= rho_rules[f].weights[idx[f]] *
                     std::pow(H[f], model.factors()[f].dim - 1);
            }
            l1 += w * std::abs(xi(H));
            int f = 0;
            while (f < r && ++idx[f] == rho_rules[f].size()) idx[f++] = 0;
            if (f == r) break;
        }
        l1 *= model.measure_constant();
    }
    if (std::abs(result) > l1 * (1.0 + 1e-8) + 1e-12)
        throw std::logic_error("backward_mt: |m_t| exceeded ||xi||_1");
    return result;
}

ConvergenceReport backward_limit_check(const SymmetricSpaceModel& model, const RadialFunction& xi,
                                       const CartanPoint& Z, std::span<const double> t_grid,
                                       const BackwardQuad& quad, int fourier_order,
                                       double slope_lo, double slope_hi) {
    if (t_grid.size() < 2 || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("backward_limit_check: need an increasing t grid");
    const double target = fourier_transform(model, xi, Z, fourier_order);

    ConvergenceReport rep;
    for (double t : t_grid) {
        double v = backward_mt(model, xi, t, Z, quad);
        rep.t.push_back(t);
        rep.values.push_back(v);
        rep.errors.push_back(std::abs(v - target));
    }
    rep.limit_estimate = rep.values.back();
    rep.slope = fit_loglog_slope(rep.t, rep.errors);

    const double floor = 1e-8;
    bool all_floor = std::all_of(rep.errors.begin(), rep.errors.end(),
                                 [&](double e) { return e <= floor; });
    if (all_floor) {
        rep.pass = true;
        rep.note = "errors at quadrature floor";
    } else {
        rep.pass = rep.errors_strictly_decreasing() &&
                   rep.slope >= slope_lo && rep.slope <= slope_hi;
    }
    return rep;
}

}  // namespace sphmult
