#include "sphmult/spherical.hpp"

#include "sphmult/contraction.hpp"
#include "sphmult/special.hpp"

#include <algorithm>
#include <cmath>

namespace sphmult {

namespace {

double block_norm(std::span<const double> X, int off, int len) {
    double s = 0.0;
    for (int k = 0; k < len; ++k) s += X[off + k] * X[off + k];
    return std::sqrt(s);
}

void check_chart(double theta) {
    if (theta > M_PI + 1e-9) throw chart_error("argument leaves the chart (|X_f| > pi)");
}

// Normalized SU(2) character sin((n+1)t)/((n+1) sin t), with the removable
// singularities at t = 0 and t = pi handled by reflection and a Taylor
// branch.
double su2_char_ratio(long long n, double theta) {
    if (theta > M_PI_2) {
        double v = su2_char_ratio(n, M_PI - theta);
        return (n % 2 == 0) ? v : -v;
    }
    double a = (n + 1.0) * theta;
    if (theta < 1e-4 && a < 1e-4) {
        // both angles small: ratio = 1 - n(n+2) theta^2/6 + O(theta^4)
        return 1.0 - n * (n + 2.0) * theta * theta / 6.0;
    }
    if (theta == 0.0) return 1.0;
    return std::sin(a) / ((n + 1.0) * std::sin(theta));
}

}  // namespace

double phi_factor(const RankOneFactor& f, long long n, double theta) {
    check_chart(theta);
    if (f.kind == RankOneFactor::Kind::SU2) return su2_char_ratio(n, theta);
    return gegenbauer_normalized(n, 0.5 * (f.dim - 1.0), std::cos(theta));
}

SpacePoint exp_point(const SymmetricSpaceModel& model, std::span<const double> X) {
    const int r = model.rank();
    const int D = model.dim();
    std::vector<double> full;
    std::span<const double> coords = X;
    if (static_cast<int>(X.size()) == r && r != D) {
        // chamber coordinates: lift each factor along its first axis
        full.assign(D, 0.0);
        for (int f = 0; f < r; ++f) full[model.factor_offset(f)] = X[f];
        coords = full;
    } else if (static_cast<int>(X.size()) != D) {
        throw std::invalid_argument("exp_point: expected chamber or full coordinates");
    }

    SpacePoint p;
    p.model = &model;
    for (int f = 0; f < r; ++f) {
        const auto& fac = model.factors()[f];
        const int off = model.factor_offset(f);
        double theta = block_norm(coords, off, fac.dim);
        check_chart(theta);
        p.embedding.push_back(std::cos(theta));
        double s = theta == 0.0 ? 0.0 : std::sin(theta) / theta;
        for (int k = 0; k < fac.dim; ++k) p.embedding.push_back(s * coords[off + k]);
    }
    return p;
}

double phi(const SymmetricSpaceModel& model, const WeightPoint& w, const CartanPoint& H) {
    model.require_rank(w.rank(), "phi");
    model.require_rank(H.rank(), "phi");
    double v = 1.0;
    for (int f = 0; f < model.rank(); ++f)
        v *= phi_factor(model.factors()[f], w.coords[f], H.coords[f]);
    return v;
}

double phi_pair(const SymmetricSpaceModel& model, const WeightPoint& w,
                std::span<const double> X, std::span<const double> Y) {
    model.require_rank(w.rank(), "phi_pair");
    if (static_cast<int>(X.size()) != model.dim() || static_cast<int>(Y.size()) != model.dim())
        throw std::invalid_argument("phi_pair: expected full coordinates");

    double v = 1.0;
    for (int f = 0; f < model.rank(); ++f) {
        const auto& fac = model.factors()[f];
        const int off = model.factor_offset(f);
        double tx = block_norm(X, off, fac.dim);
        double ty = block_norm(Y, off, fac.dim);
        check_chart(tx);
        check_chart(ty);
        // inner product of the embeddings of X_f and -Y_f
        double dot = 0.0;
        for (int k = 0; k < fac.dim; ++k) dot += X[off + k] * Y[off + k];
        double sx = tx == 0.0 ? 1.0 : std::sin(tx) / tx;
        double sy = ty == 0.0 ? 1.0 : std::sin(ty) / ty;
        double inner = std::cos(tx) * std::cos(ty) - sx * sy * dot;
        double angle = std::acos(std::clamp(inner, -1.0, 1.0));
        v *= phi_factor(fac, w.coords[f], angle);
    }
    return v;
}

double gen_bessel(const SymmetricSpaceModel& model, const CartanPoint& Z,
                  std::span<const double> X) {
    model.require_rank(Z.rank(), "gen_bessel");
    if (static_cast<int>(X.size()) != model.dim())
        throw std::invalid_argument("gen_bessel: expected full coordinates");
    double v = 1.0;
    for (int f = 0; f < model.rank(); ++f) {
        const auto& fac = model.factors()[f];
        double theta = block_norm(X, model.factor_offset(f), fac.dim);
        v *= bessel_j_normalized(fac.nu, Z.coords[f] * theta);
    }
    return v;
}

ConvergenceReport lemma_limit_check(const SymmetricSpaceModel& model,
                                    const CartanPoint& Z,
                                    std::span<const double> X,
                                    std::span<const double> Y,
                                    std::span<const double> t_grid,
                                    double slope_lo, double slope_hi) {
    if (t_grid.size() < 2 || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("lemma_limit_check: need an increasing t grid");

    std::vector<double> XY(model.dim());
    for (int k = 0; k < model.dim(); ++k) XY[k] = X[k] + Y[k];
    const double target = gen_bessel(model, Z, XY);

    ConvergenceReport rep;
    std::vector<double> xs(model.dim()), ys(model.dim());
    for (double t : t_grid) {
        for (int k = 0; k < model.dim(); ++k) {
            xs[k] = X[k] / t;
            ys[k] = Y[k] / t;
        }
        double v = phi_pair(model, floor_weight(t, Z).weight, xs, ys);
        rep.t.push_back(t);
        rep.values.push_back(v);
        rep.errors.push_back(std::abs(v - target));
    }
    rep.limit_estimate = rep.values.back();
    rep.slope = fit_loglog_slope(rep.t, rep.errors);
    const double floor = 1e-12;
    bool all_floor = std::all_of(rep.errors.begin(), rep.errors.end(),
                                 [&](double e) { return e <= floor; });
    if (all_floor) {
        rep.pass = true;
        rep.note = "errors at numerical floor";
    } else {
        rep.pass = rep.errors_strictly_decreasing() &&
                   rep.slope >= slope_lo && rep.slope <= slope_hi;
    }
    return rep;
}

}  // namespace sphmult
