#include "sphmult/model.hpp"

#include <algorithm>
#include <cmath>

namespace sphmult {

namespace {

// Surface area of the unit sphere S^{k} in R^{k+1}.
double sphere_surface(int k) {
    return 2.0 * std::pow(M_PI, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

WeightPoint::WeightPoint(std::vector<long long> c) : coords(std::move(c)) {
    for (long long v : coords)
        if (v < 0) throw std::invalid_argument("WeightPoint: coordinates must be >= 0");
}

CartanPoint::CartanPoint(std::vector<double> c) : coords(std::move(c)) {
    for (double v : coords)
        if (!(v >= 0.0)) throw std::invalid_argument("CartanPoint: coordinates must be >= 0");
}

double CartanPoint::norm2() const {
    double s = 0.0;
    for (double v : coords) s += v * v;
    return std::sqrt(s);
}

double RestrictedRoot::apply(std::span<const double> chamber) const {
    double s = 0.0;
    for (std::size_t j = 0; j < coords.size(); ++j) s += coords[j] * chamber[j];
    return s;
}

SymmetricSpaceModel SymmetricSpaceModel::sphere(int d) {
    if (d < 2) throw invalid_model_error("sphere: need d >= 2");
    RankOneFactor f;
    f.kind = RankOneFactor::Kind::Sphere;
    f.name = "sphere:" + std::to_string(d);
    f.dim = d;
    f.multiplicity = d - 1;
    f.nu = 0.5 * (d - 2);
    f.chamber_radius = M_PI * 0.45;
    // Pairing constants <beta, delta> of the d-1 ambient roots over the
    // restricted root: {1, ..., d-2} plus (d-1)/2, which reproduces the
    // classical harmonic dimension (2n+d-1)(n+d-2)!/(n!(d-1)!).
    for (int c = 1; c <= d - 2; ++c) f.weyl_denominators.push_back(c);
    f.weyl_denominators.push_back(0.5 * (d - 1.0));

    SymmetricSpaceModel m;
    m.name_ = f.name;
    m.factors_.push_back(std::move(f));
    m.finalize();
    return m;
}

SymmetricSpaceModel SymmetricSpaceModel::su2() {
    RankOneFactor f;
    f.kind = RankOneFactor::Kind::SU2;
    f.name = "su2";
    f.dim = 3;
    f.multiplicity = 2;
    f.nu = 0.5;
    f.chamber_radius = M_PI * 0.45;
    f.weyl_denominators = {1.0, 1.0};  // class-1 factors (n+1)^2

    SymmetricSpaceModel m;
    m.name_ = "su2";
    m.factors_.push_back(std::move(f));
    m.finalize();
    return m;
}

SymmetricSpaceModel SymmetricSpaceModel::product(const SymmetricSpaceModel& a,
                                                 const SymmetricSpaceModel& b) {
    SymmetricSpaceModel m;
    m.name_ = "product:" + a.name_ + "," + b.name_;
    m.factors_ = a.factors_;
    m.factors_.insert(m.factors_.end(), b.factors_.begin(), b.factors_.end());
    m.finalize();
    return m;
}

void SymmetricSpaceModel::finalize() {
    dim_ = 0;
    offsets_.clear();
    chamber_radius_ = factors_.empty() ? 0.0 : factors_[0].chamber_radius;
    for (auto& f : factors_) {
        f.sphere_area = sphere_surface(f.dim - 1);
        f.orbit_area = sphere_surface(f.dim - 2);
        offsets_.push_back(dim_);
        dim_ += f.dim;
        chamber_radius_ = std::min(chamber_radius_, f.chamber_radius);
    }
    // Construction-time sanity: the chart Jacobian (sin t / t)^m stays
    // strictly positive on the chamber ball.
    for (const auto& f : factors_) {
        for (int i = 0; i <= 16; ++i) {
            double t = f.chamber_radius * i / 16.0;
            double j = std::pow(sinc(t), f.multiplicity);
            if (!(j > 0.0 && j <= 1.0 + 1e-15))
                throw invalid_model_error("model: Jacobian not in (0,1] on chamber ball");
        }
    }
}

namespace {

// Splits "x,y" at top-level commas, honoring parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

std::string_view strip_parens(std::string_view s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        // only strip if the parens match each other
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') --depth;
            if (depth == 0) { wraps = false; break; }
        }
        if (!wraps) break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

}  // namespace

SymmetricSpaceModel SymmetricSpaceModel::from_name(std::string_view name) {
    name = strip_parens(name);
    if (name == "su2") return su2();
    if (name.starts_with("sphere:")) {
        auto ds = name.substr(7);
        int d = 0;
        for (char c : ds) {
            if (c < '0' || c > '9') throw invalid_model_error("bad sphere dimension: " + std::string(name));
            d = d * 10 + (c - '0');
        }
        if (ds.empty()) throw invalid_model_error("bad sphere dimension: " + std::string(name));
        return sphere(d);
    }
    if (name.starts_with("product:")) {
        auto parts = split_top_level(name.substr(8));
        if (parts.size() != 2)
            throw invalid_model_error("product needs exactly two factors: " + std::string(name));
        return product(from_name(parts[0]), from_name(parts[1]));
    }
    throw invalid_model_error("unknown model name: " + std::string(name));
}

std::vector<RestrictedRoot> SymmetricSpaceModel::roots() const {
    std::vector<RestrictedRoot> out;
    for (int f = 0; f < rank(); ++f) {
        RestrictedRoot r;
        r.coords.assign(rank(), 0.0);
        r.coords[f] = 1.0;
        r.multiplicity = factors_[f].multiplicity;
        r.weyl_denominators = factors_[f].weyl_denominators;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<double> SymmetricSpaceModel::delta() const {
    std::vector<double> d(rank());
    for (int f = 0; f < rank(); ++f) d[f] = 0.5 * factors_[f].multiplicity;
    return d;
}

double SymmetricSpaceModel::measure_constant() const {
    double c = 1.0;
    for (const auto& f : factors_) c *= f.sphere_area;
    return c;
}

void SymmetricSpaceModel::require_rank(int r, const char* what) const {
    if (r != rank())
        throw std::invalid_argument(std::string(what) + ": coordinate rank " + std::to_string(r) +
                                    " does not match model rank " + std::to_string(rank()));
}

double SymmetricSpaceModel::weyl_dim(const WeightPoint& w) const {
    require_rank(w.rank(), "weyl_dim");
    double dim = 1.0;
    for (int f = 0; f < rank(); ++f) {
        double n = static_cast<double>(w.coords[f]);
        for (double c : factors_[f].weyl_denominators) dim *= (n + c) / c;
    }
    return dim;
}

double SymmetricSpaceModel::density(const CartanPoint& H) const {
    require_rank(H.rank(), "density");
    double d = 1.0;
    for (int f = 0; f < rank(); ++f)
        d *= std::pow(H.coords[f], factors_[f].multiplicity);
    return d;
}

double SymmetricSpaceModel::dim_scaling_limit(const CartanPoint& Z) const {
    require_rank(Z.rank(), "dim_scaling_limit");
    double v = 1.0;
    for (int f = 0; f < rank(); ++f) {
        v *= std::pow(Z.coords[f], factors_[f].multiplicity);
        for (double c : factors_[f].weyl_denominators) v /= c;
    }
    return v;
}

}  // namespace sphmult
