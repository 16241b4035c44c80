#include "sphmult/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sphmult {

RadialFunction RadialFunction::from_evaluator(int rank, std::vector<double> axis_support,
                                              Evaluator f, std::string description) {
    if (rank < 1 || static_cast<int>(axis_support.size()) != rank)
        throw std::invalid_argument("RadialFunction: bad rank/support");
    for (double s : axis_support)
        if (!(s > 0.0)) throw std::invalid_argument("RadialFunction: support radius must be > 0");
    RadialFunction r;
    r.rank_ = rank;
    r.axis_support_ = std::move(axis_support);
    r.eval_ = std::move(f);
    r.description_ = std::move(description);
    return r;
}

RadialFunction RadialFunction::from_evaluator1d(double support_radius,
                                                std::function<double(double)> f,
                                                std::string description) {
    auto g = [fn = std::move(f)](std::span<const double> H) { return fn(H[0]); };
    return from_evaluator(1, {support_radius}, g, std::move(description));
}

namespace {

// Local cubic (4-point Lagrange) interpolation on a uniform grid; exact at
// the nodes, one-sided near the edges.
double cubic_interp(const std::vector<double>& v, double h, double x) {
    const int n = static_cast<int>(v.size());
    double u = x / h;
    int i0 = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, n - 4);
    double d = u - i0;
    double l0 = -(d - 1.0) * (d - 2.0) * (d - 3.0) / 6.0;
    double l1 = d * (d - 2.0) * (d - 3.0) / 2.0;
    double l2 = -d * (d - 1.0) * (d - 3.0) / 2.0;
    double l3 = d * (d - 1.0) * (d - 2.0) / 6.0;
    return l0 * v[i0] + l1 * v[i0 + 1] + l2 * v[i0 + 2] + l3 * v[i0 + 3];
}

}  // namespace

RadialFunction RadialFunction::from_samples(std::vector<double> values, double support_radius,
                                            std::string description) {
    if (values.size() < 4)
        throw std::invalid_argument("RadialFunction::from_samples: need at least 4 samples");
    if (!(support_radius > 0.0))
        throw std::invalid_argument("RadialFunction::from_samples: support radius must be > 0");
    const double h = support_radius / (values.size() - 1);
    auto f = [vals = std::move(values), h](double theta) {
        return cubic_interp(vals, h, theta);
    };
    return from_evaluator1d(support_radius, std::move(f), std::move(description));
}

RadialFunction RadialFunction::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty profile CSV: " + path);
    // header row is mandatory; reject files that start with data
    if (line.find_first_not_of("0123456789+-.eE, \t\r") == std::string::npos)
        throw std::runtime_error("profile CSV must start with a header row: " + path);

    std::vector<double> radii, values;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw std::runtime_error("bad CSV row " + std::to_string(lineno) + " in " + path);
        radii.push_back(std::stod(a));
        values.push_back(std::stod(b));
    }
    if (radii.size() < 4) throw std::runtime_error("profile CSV needs >= 4 rows: " + path);
    const double R = radii.back();
    if (!(R > 0.0)) throw std::runtime_error("profile CSV support must be positive: " + path);
    const double h = R / (radii.size() - 1);
    if (std::abs(radii.front()) > 1e-9 * R)
        throw std::runtime_error("profile CSV must start at radius 0: " + path);
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (std::abs(radii[i] - i * h) > 1e-6 * R)
            throw std::runtime_error("profile CSV radii must be a uniform grid: " + path);
    return from_samples(std::move(values), R, "csv:" + path);
}

RadialFunction RadialFunction::tensor(const RadialFunction& a, const RadialFunction& b) {
    RadialFunction r;
    r.rank_ = a.rank_ + b.rank_;
    r.axis_support_ = a.axis_support_;
    r.axis_support_.insert(r.axis_support_.end(), b.axis_support_.begin(), b.axis_support_.end());
    r.description_ = a.description_ + " (x) " + b.description_;
    const int ra = a.rank_;
    r.eval_ = [a, b, ra](std::span<const double> H) {
        return a(H.subspan(0, ra)) * b(H.subspan(ra));
    };
    if (a.rank_ == 1 && b.rank_ == 1) {
        r.tensor_factors_ = {a, b};
    } else {
        auto flatten = [&](const RadialFunction& f) {
            if (f.is_tensor())
                r.tensor_factors_.insert(r.tensor_factors_.end(), f.tensor_factors_.begin(),
                                         f.tensor_factors_.end());
            else
                r.tensor_factors_.push_back(f);
        };
        flatten(a);
        flatten(b);
        if (static_cast<int>(r.tensor_factors_.size()) != r.rank_) r.tensor_factors_.clear();
    }
    return r;
}

double RadialFunction::operator()(std::span<const double> H) const {
    if (static_cast<int>(H.size()) != rank_)
        throw std::invalid_argument("RadialFunction: coordinate rank mismatch");
    for (int j = 0; j < rank_; ++j)
        if (H[j] > axis_support_[j] || H[j] < 0.0) return 0.0;
    return eval_(H);
}

double RadialFunction::value1d(double theta) const {
    if (rank_ != 1) throw std::invalid_argument("RadialFunction::value1d: rank != 1");
    return (*this)(std::span<const double>(&theta, 1));
}

double RadialFunction::support_radius() const {
    return *std::max_element(axis_support_.begin(), axis_support_.end());
}

RadialFunction RadialFunction::scaled(double c) const {
    RadialFunction r = *this;
    auto base = eval_;
    r.eval_ = [base, c](std::span<const double> H) { return c * base(H); };
    r.description_ = description_ + " * " + std::to_string(c);
    for (auto& f : r.tensor_factors_) f = RadialFunction();  // scaling breaks factorization bookkeeping
    r.tensor_factors_.clear();
    return r;
}

RadialFunction make_gaussian_profile(double sigma, double cutoff_sigmas) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian profile: sigma must be > 0");
    double R = sigma * cutoff_sigmas;
    auto f = [sigma](double t) { return std::exp(-0.5 * t * t / (sigma * sigma)); };
    return RadialFunction::from_evaluator1d(R, f, "gauss(sigma=" + std::to_string(sigma) + ")");
}

RadialFunction make_modulated_gaussian(double sigma, double k, double cutoff_sigmas) {
    double R = sigma * cutoff_sigmas;
    auto f = [sigma, k](double t) {
        return std::exp(-0.5 * t * t / (sigma * sigma)) * std::cos(k * t);
    };
    return RadialFunction::from_evaluator1d(
        R, f, "gauss(sigma=" + std::to_string(sigma) + ")*cos(" + std::to_string(k) + " t)");
}

RadialFunction make_smooth_bump(double radius, int flatness) {
    if (!(radius > 0.0)) throw std::invalid_argument("smooth bump: radius must be > 0");
    if (flatness < 1) throw std::invalid_argument("smooth bump: flatness must be >= 1");
    auto f = [radius, flatness](double t) {
        double u = t / radius;
        if (u >= 1.0) return 0.0;
        return std::pow(1.0 - u * u, flatness);
    };
    return RadialFunction::from_evaluator1d(
        radius, f, "bump(r=" + std::to_string(radius) + ",k=" + std::to_string(flatness) + ")");
}

namespace {

// Shared tabulation for both transform directions: per-axis rules plus the
// flattened profile * density * weight table.
void tabulate(const SymmetricSpaceModel& model, const RadialFunction& g, int order,
              double global_scale, std::vector<QuadratureRule>& rules,
              std::vector<double>& table, std::vector<int>& dims) {
    model.require_rank(g.rank(), "transform");
    if (order < 1) throw std::domain_error("transform: order must be >= 1");
    const int r = model.rank();
    rules.clear();
    dims.assign(r, order);
    std::size_t total = 1;
    for (int f = 0; f < r; ++f) {
        rules.push_back(gauss_legendre(order, 0.0, g.axis_support()[f]));
        total *= order;
    }
    table.assign(total, 0.0);
    std::vector<std::size_t> idx(r, 0);
    std::vector<double> H(r);
    for (std::size_t flat = 0; flat < total; ++flat) {
        double w = global_scale;
        for (int f = 0; f < r; ++f) {
            double theta = rules[f].nodes[idx[f]];
            H[f] = theta;
            w *= rules[f].weights[idx[f]] *
                 std::pow(theta, model.factors()[f].multiplicity);
        }
        table[flat] = w * g(H);
        int f = 0;
        while (f < r && ++idx[f] == static_cast<std::size_t>(order)) idx[f++] = 0;
    }
}

// sum over the tensor grid of table * prod_f j_{nu_f}(s_f * node_f).
double contract(const SymmetricSpaceModel& model, const std::vector<QuadratureRule>& rules,
                const std::vector<double>& table, const std::vector<int>& dims,
                const CartanPoint& S) {
    const int r = model.rank();
    // kernel values per axis
    std::vector<std::vector<double>> kern(r);
    for (int f = 0; f < r; ++f) {
        kern[f].resize(dims[f]);
        for (int i = 0; i < dims[f]; ++i)
            kern[f][i] = bessel_j_normalized(model.factors()[f].nu,
                                             S.coords[f] * rules[f].nodes[i]);
    }
    double acc = 0.0;
    std::vector<std::size_t> idx(r, 0);
    for (std::size_t flat = 0; flat < table.size(); ++flat) {
        double k = 1.0;
        for (int f = 0; f < r; ++f) k *= kern[f][idx[f]];
        acc += table[flat] * k;
        int f = 0;
        while (f < r && ++idx[f] == static_cast<std::size_t>(dims[f])) idx[f++] = 0;
    }
    return acc;
}

}  // namespace

ForwardTransform::ForwardTransform(const SymmetricSpaceModel& model, const RadialFunction& xi,
                                   int order)
    : model_(&model) {
    tabulate(model, xi, order, model.measure_constant(), rules_, weighted_values_, dims_);
}

double ForwardTransform::at(const CartanPoint& Z) const {
    model_->require_rank(Z.rank(), "ForwardTransform::at");
    return contract(*model_, rules_, weighted_values_, dims_, Z);
}

double ForwardTransform::mass() const {
    double acc = 0.0;
    for (double v : weighted_values_) acc += v;
    return acc;
}

InverseTransform::InverseTransform(const SymmetricSpaceModel& model, const RadialFunction& xhat,
                                   int order)
    : model_(&model) {
    double scale = model.measure_constant() / std::pow(2.0 * M_PI, model.dim());
    tabulate(model, xhat, order, scale, rules_, weighted_values_, dims_);
}

double InverseTransform::at(const CartanPoint& X) const {
    model_->require_rank(X.rank(), "InverseTransform::at");
    return contract(*model_, rules_, weighted_values_, dims_, X);
}

double fourier_transform(const SymmetricSpaceModel& model, const RadialFunction& xi,
                         const CartanPoint& Z, int order) {
    return ForwardTransform(model, xi, order).at(Z);
}

double inverse_transform(const SymmetricSpaceModel& model, const RadialFunction& xhat,
                         const CartanPoint& X, int order) {
    return InverseTransform(model, xhat, order).at(X);
}

RadialFunction unit_mass(const SymmetricSpaceModel& model, const RadialFunction& xi, int order) {
    double m = ForwardTransform(model, xi, order).mass();
    if (m == 0.0) throw std::domain_error("unit_mass: profile has zero mass");
    return xi.scaled(1.0 / m);
}

std::vector<double> choose_inverse_radius(const SymmetricSpaceModel& model,
                                          const RadialFunction& xi, int order,
                                          double threshold, double cap) {
    ForwardTransform F(model, xi, order);
    const int r = model.rank();
    std::vector<double> radius(r);
    for (int f = 0; f < r; ++f) {
        // beyond ~1.5 nodes per radian the forward rule only returns
        // aliasing noise, so never scan past its resolution
        double resolution = 1.5 * order / xi.axis_support()[f];
        double fcap = std::min(cap, resolution);
        CartanPoint Z(std::vector<double>(r, 0.0));
        double last_live = 1.0;
        double scale = std::abs(F.at(Z));
        for (double z = 0.5; z <= fcap; z += 0.5) {
            Z.coords[f] = z;
            double v = std::abs(F.at(Z));
            scale = std::max(scale, v);
            // values at the forward quadrature's noise floor count as dead
            // no matter how large the density factor has grown
            if (v < 1e-13 * scale) continue;
            double metric = v * std::pow(z, model.factors()[f].multiplicity);
            if (metric >= threshold) last_live = z;
        }
        radius[f] = std::min(last_live + 2.0, fcap);
    }
    return radius;
}

RadialFunction transform_profile(const SymmetricSpaceModel& model, const RadialFunction& xi,
                                 std::vector<double> radius, int order) {
    auto F = std::make_shared<ForwardTransform>(model, xi, order);
    auto eval = [F](std::span<const double> Z) {
        return F->at(CartanPoint(std::vector<double>(Z.begin(), Z.end())));
    };
    return RadialFunction::from_evaluator(model.rank(), std::move(radius), eval,
                                          "FT[" + xi.description() + "]");
}

}  // namespace sphmult
