#include "sphmult/norms.hpp"

#include "sphmult/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace sphmult {

NormEstimate l2_norm(std::span<const double> symbol_values) {
    if (symbol_values.empty()) throw std::domain_error("l2_norm: empty symbol table");
    double sup = 0.0;
    for (double v : symbol_values) sup = std::max(sup, std::abs(v));
    return {2.0, sup, NormKind::exact, "sup of |symbol| (Plancherel)"};
}

NormEstimate l2_norm(const std::function<double(const CartanPoint&)>& symbol,
                     std::span<const CartanPoint> grid) {
    if (grid.empty()) throw std::domain_error("l2_norm: empty symbol grid");
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (const auto& Z : grid) vals.push_back(symbol(Z));
    return l2_norm(vals);
}

namespace {

// Tensor-grid L^p norm with per-axis Gauss-Legendre rules and a per-node
// weight callback; returns (int |f|^p w)^(1/p).
template <class Value, class Weight>
double lp_tensor_norm(int rank, const std::vector<QuadratureRule>& rules, double p,
                      Value&& value, Weight&& weight) {
    std::vector<std::size_t> idx(rank, 0);
    std::vector<double> H(rank);
    double acc = 0.0;
    for (;;) {
        double w = 1.0;
        for (int f = 0; f < rank; ++f) {
            H[f] = rules[f].nodes[idx[f]];
            w *= rules[f].weights[idx[f]];
        }
        w *= weight(H);
        acc += w * std::pow(std::abs(value(H)), p);
        int f = 0;
        while (f < rank && ++idx[f] == rules[f].size()) idx[f++] = 0;
        if (f == rank) break;
    }
    return std::pow(acc, 1.0 / p);
}

}  // namespace

NormEstimate lp_lower_bound_flat(const SymmetricSpaceModel& model,
                                 const std::function<double(const CartanPoint&)>& symbol,
                                 double p, std::span<const RadialFunction> trials,
                                 const LpFlatOptions& opt) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::domain_error("lp_lower_bound_flat: need p in (1, inf)");
    if (trials.empty()) throw std::domain_error("lp_lower_bound_flat: no trials");

    const int r = model.rank();
    auto density = [&](std::span<const double> H) {
        double d = 1.0;
        for (int f = 0; f < r; ++f) d *= std::pow(H[f], model.factors()[f].multiplicity);
        return d;
    };

    NormEstimate best{p, 0.0, NormKind::lower_bound, ""};
    bool any_nonzero = false;
    for (const auto& trial : trials) {
        model.require_rank(trial.rank(), "lp_lower_bound_flat trial");

        // both norms go over the same window rule so that the quadrature
        // error of |.|^p at sign changes cancels in the ratio
        std::vector<QuadratureRule> out_rules;
        for (int f = 0; f < r; ++f)
            out_rules.push_back(
                gauss_legendre(opt.theta_order, 0.0, opt.window_mult * trial.axis_support()[f]));

        double fnorm = lp_tensor_norm(r, out_rules, p,
                                      [&](std::span<const double> H) { return trial(H); }, density);
        fnorm *= std::pow(model.measure_constant(), 1.0 / p);
        if (!(fnorm > 0.0)) continue;
        any_nonzero = true;

        // T_m f = inverse(m * forward(f)), truncated where the transform has
        // decayed below the tail threshold.
        ForwardTransform F(model, trial, opt.theta_order);
        std::vector<double> zrad = choose_inverse_radius(model, trial, opt.theta_order,
                                                         opt.tail_threshold, opt.zmax_cap);
        auto mf = RadialFunction::from_evaluator(
            r, zrad,
            [&](std::span<const double> z) {
                CartanPoint Z(std::vector<double>(z.begin(), z.end()));
                return symbol(Z) * F.at(Z);
            },
            "m*FT[" + trial.description() + "]");
        InverseTransform Tm(model, mf, opt.z_order);

        double gnorm = lp_tensor_norm(
            r, out_rules, p,
            [&](std::span<const double> H) {
                return Tm.at(CartanPoint(std::vector<double>(H.begin(), H.end())));
            },
            density);
        gnorm *= std::pow(model.measure_constant(), 1.0 / p);

        double ratio = gnorm / fnorm;
        if (ratio > best.value) {
            best.value = ratio;
            best.witness = trial.description();
        }
    }
    if (!any_nonzero) throw std::domain_error("lp_lower_bound_flat: all trials are zero");
    return best;
}

NormEstimate lp_lower_bound_spherical(const SymmetricSpaceModel& model,
                                      const std::function<double(const WeightPoint&)>& symbol,
                                      double p, int degree_cut,
                                      std::span<const ZonalTrial> trials, int theta_order) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::domain_error("lp_lower_bound_spherical: need p in (1, inf)");
    if (degree_cut < 1) throw std::domain_error("lp_lower_bound_spherical: need degree_cut >= 1");
    if (trials.empty()) throw std::domain_error("lp_lower_bound_spherical: no trials");

    const int r = model.rank();
    const int per_axis = degree_cut + 1;
    std::size_t lattice = 1;
    for (int f = 0; f < r; ++f) lattice *= per_axis;

    std::vector<QuadratureRule> rules(r, gauss_legendre(theta_order, 0.0, M_PI));

    // phi tables per factor and degree, and weights/dims per lattice point
    std::vector<std::vector<std::vector<double>>> phi_tab(r);
    for (int f = 0; f < r; ++f) {
        phi_tab[f].assign(per_axis, std::vector<double>(theta_order));
        for (int n = 0; n < per_axis; ++n)
            for (int i = 0; i < theta_order; ++i)
                phi_tab[f][n][i] = phi_factor(model.factors()[f], n, rules[f].nodes[i]);
    }
    std::vector<double> dims(lattice), mvals(lattice);
    {
        std::vector<long long> n(r, 0);
        for (std::size_t flat = 0; flat < lattice; ++flat) {
            WeightPoint w(std::vector<long long>(n.begin(), n.end()));
            dims[flat] = model.weyl_dim(w);
            mvals[flat] = symbol(w);
            int f = 0;
            while (f < r && ++n[f] == per_axis) n[f++] = 0;
        }
    }

    auto surface = [&](std::span<const double> H) {
        double s = 1.0;
        for (int f = 0; f < r; ++f)
            s *= std::pow(std::sin(H[f]), model.factors()[f].dim - 1);
        return s;
    };

    NormEstimate best{p, 0.0, NormKind::lower_bound, ""};
    bool any_nonzero = false;
    for (const auto& trial : trials) {
        if (trial.coefficients.size() != lattice)
            throw std::invalid_argument("lp_lower_bound_spherical: trial has " +
                                        std::to_string(trial.coefficients.size()) +
                                        " coefficients, lattice needs " + std::to_string(lattice));

        // f and Tf on the tensor grid; node index decoded per axis
        auto eval_series = [&](std::span<const double> H, bool apply_symbol,
                               const std::vector<int>& node_idx) {
            double acc = 0.0;
            std::vector<int> n(r, 0);
            for (std::size_t flat = 0; flat < lattice; ++flat) {
                double a = trial.coefficients[flat];
                if (a != 0.0) {
                    double term = a * dims[flat];
                    if (apply_symbol) term *= mvals[flat];
                    for (int f = 0; f < r; ++f) term *= phi_tab[f][n[f]][node_idx[f]];
                    acc += term;
                }
                int f = 0;
                while (f < r && ++n[f] == per_axis) n[f++] = 0;
            }
            return acc;
        };

        // walk the tensor grid once for both norms
        std::vector<std::size_t> idx(r, 0);
        std::vector<double> H(r);
        std::vector<int> nidx(r);
        double facc = 0.0, gacc = 0.0;
        for (;;) {
            double w = 1.0;
            for (int f = 0; f < r; ++f) {
                H[f] = rules[f].nodes[idx[f]];
                nidx[f] = static_cast<int>(idx[f]);
                w *= rules[f].weights[idx[f]];
            }
            w *= surface(H);
            facc += w * std::pow(std::abs(eval_series(H, false, nidx)), p);
            gacc += w * std::pow(std::abs(eval_series(H, true, nidx)), p);
            int f = 0;
            while (f < r && ++idx[f] == rules[f].size()) idx[f++] = 0;
            if (f == r) break;
        }
        double fnorm = std::pow(model.measure_constant() * facc, 1.0 / p);
        double gnorm = std::pow(model.measure_constant() * gacc, 1.0 / p);
        if (!(fnorm > 0.0)) continue;
        any_nonzero = true;
        double ratio = gnorm / fnorm;
        if (ratio > best.value) {
            best.value = ratio;
            best.witness = trial.name;
        }
    }
    if (!any_nonzero) throw std::domain_error("lp_lower_bound_spherical: all trials are zero");
    return best;
}

std::vector<RadialFunction> default_flat_trials(const SymmetricSpaceModel& model) {
    // fixed widths/modulations so runs are reproducible without seeds
    static const double widths[] = {0.05, 0.08, 0.11, 0.15, 0.20, 0.26, 0.33, 0.40};
    static const double modulated[][2] = {{0.15, 3.0}, {0.15, 6.0}, {0.25, 4.0}, {0.30, 8.0}};

    std::vector<RadialFunction> base;
    for (double s : widths) base.push_back(make_gaussian_profile(s));
    for (auto& mk : modulated) base.push_back(make_modulated_gaussian(mk[0], mk[1]));

    if (model.rank() == 1) return base;
    std::vector<RadialFunction> out;
    for (const auto& b : base) {
        RadialFunction t = b;
        for (int f = 1; f < model.rank(); ++f) t = RadialFunction::tensor(t, b);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<ZonalTrial> default_zonal_trials(int degree_cut) {
    const int n = degree_cut + 1;
    std::vector<ZonalTrial> out;
    auto add = [&](std::string name, std::function<double(int)> gen) {
        ZonalTrial t;
        t.name = std::move(name);
        t.coefficients.resize(n);
        for (int k = 0; k < n; ++k) t.coefficients[k] = gen(k);
        out.push_back(std::move(t));
    };
    add("phi_0", [](int k) { return k == 0 ? 1.0 : 0.0; });
    add("phi_cut", [n](int k) { return k == n - 1 ? 1.0 : 0.0; });
    add("decay (n+1)^-2", [](int k) { return 1.0 / ((k + 1.0) * (k + 1.0)); });
    add("alternating (n+1)^-1", [](int k) { return (k % 2 ? -1.0 : 1.0) / (k + 1.0); });
    add("flat", [](int) { return 1.0; });
    add("exp(-n)", [](int k) { return std::exp(-static_cast<double>(k)); });
    return out;
}

TransferenceNormReport transference_norm_report(
    const SymmetricSpaceModel& model, const RadialFunction& xi, double p,
    std::span<const double> t_grid, std::span<const double> z_grid,
    std::span<const RadialFunction> trials, int degree_cut, const BackwardQuad& bquad,
    const LpFlatOptions& opt, double p2_tol) {
    const int r = model.rank();
    auto diag = [r](double z) { return CartanPoint(std::vector<double>(r, z)); };

    TransferenceNormReport rep;
    rep.p = p;

    ForwardTransform Fxi(model, xi, opt.theta_order);
    auto flat_symbol = [&](const CartanPoint& Z) { return Fxi.at(Z); };
    rep.flat = lp_lower_bound_flat(model, flat_symbol, p, trials, opt);

    auto zonal = default_zonal_trials(degree_cut);
    for (double t : t_grid) {
        auto mt = [&](const WeightPoint& w) {
            std::vector<double> z(r);
            for (int f = 0; f < r; ++f) z[f] = static_cast<double>(w.coords[f]) / t;
            return backward_mt(model, xi, t, CartanPoint(std::move(z)), bquad);
        };
        if (r == 1) {
            rep.spherical.push_back(
                lp_lower_bound_spherical(model, mt, p, degree_cut, zonal, opt.theta_order));
        } else {
            // product lattice: reuse the rank-one patterns tensored per axis
            std::vector<ZonalTrial> tensored;
            const int per = degree_cut + 1;
            std::size_t lattice = 1;
            for (int f = 0; f < r; ++f) lattice *= per;
            for (const auto& z1 : zonal) {
                ZonalTrial t2;
                t2.name = z1.name + " (tensor)";
                t2.coefficients.resize(lattice);
                std::vector<int> n(r, 0);
                for (std::size_t flat = 0; flat < lattice; ++flat) {
                    double c = 1.0;
                    for (int f = 0; f < r; ++f) c *= z1.coefficients[n[f]];
                    t2.coefficients[flat] = c;
                    int f = 0;
                    while (f < r && ++n[f] == per) n[f++] = 0;
                }
                tensored.push_back(std::move(t2));
            }
            rep.spherical.push_back(
                lp_lower_bound_spherical(model, mt, p, degree_cut, tensored, opt.theta_order));
        }
        rep.t.push_back(t);
        rep.ratio.push_back(rep.spherical.back().value > 0.0
                                ? rep.flat.value / rep.spherical.back().value
                                : 0.0);
    }

    // p = 2: both operator norms collapse to symbol sups, which converge to
    // each other by the backward limit.
    if (p == 2.0) {
        double sup_flat = 0.0;
        for (double z : z_grid) sup_flat = std::max(sup_flat, std::abs(Fxi.at(diag(z))));
        rep.sup_flat_symbol = sup_flat;
        for (double t : t_grid) {
            double s = 0.0;
            for (double z : z_grid)
                s = std::max(s, std::abs(backward_mt(model, xi, t, diag(z), bquad)));
            rep.sup_mt.push_back(s);
        }
        rep.p2_gap = std::abs(sup_flat - rep.sup_mt.back());
        rep.p2_pass = rep.p2_gap < p2_tol;
    } else {
        rep.note = "lower bounds only; no assertion for p != 2";
    }
    return rep;
}

}  // namespace sphmult
