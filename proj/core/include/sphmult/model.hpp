#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sphmult {

// Thrown when a model cannot be constructed (e.g. sphere dimension < 2).
struct invalid_model_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a point leaves the injectivity chart of the exponential map.
struct chart_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Class-1 weight lambda = sum n_j sigma_j, stored as its nonnegative integer
// coordinates in the dual basis.
struct WeightPoint {
    std::vector<long long> coords;

    WeightPoint() = default;
    explicit WeightPoint(std::vector<long long> c);

    int rank() const { return static_cast<int>(coords.size()); }
};

// Point of the closed positive chamber, nonnegative real coordinates in the
// H_j basis. Doubles as the home of spectral parameters Z and radial
// arguments H; all factors of i from the ambient construction are absorbed
// into the coordinates.
struct CartanPoint {
    std::vector<double> coords;

    CartanPoint() = default;
    explicit CartanPoint(std::vector<double> c);
    static CartanPoint scalar(double z) { return CartanPoint({z}); }

    int rank() const { return static_cast<int>(coords.size()); }
    double norm2() const;
};

// One restricted positive root: a linear functional on chamber coordinates,
// its multiplicity, and the pairing constants <beta_i, delta> of the
// multiplicity-many ambient roots lying above it. The latter are what the
// dimension formula actually consumes.
struct RestrictedRoot {
    std::vector<double> coords;
    int multiplicity = 0;
    std::vector<double> weyl_denominators;

    double apply(std::span<const double> chamber) const;
};

// Rank-one building block. Every model in scope is a product of these.
struct RankOneFactor {
    enum class Kind { Sphere, SU2 };
    Kind kind = Kind::Sphere;
    std::string name;
    int dim = 0;           // D_f
    int multiplicity = 0;  // D_f - 1, multiplicity of the single root
    double nu = 0.0;       // (D_f - 2)/2, kernel order
    double chamber_radius = 0.0;
    std::vector<double> weyl_denominators;
    double sphere_area = 0.0;   // |S^{D_f - 1}|
    double orbit_area = 0.0;    // |S^{D_f - 2}|, for orbit-angle reduction
};

// Structural data of one compact symmetric space instance. Immutable after
// construction; all member functions are pure and thread-safe.
class SymmetricSpaceModel {
public:
    static SymmetricSpaceModel sphere(int d);
    static SymmetricSpaceModel su2();
    static SymmetricSpaceModel product(const SymmetricSpaceModel& a,
                                       const SymmetricSpaceModel& b);
    // Parses "sphere:d", "su2", "product:<a>,<b>" (factors may be
    // parenthesized for nesting).
    static SymmetricSpaceModel from_name(std::string_view name);

    const std::string& name() const { return name_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    int dim() const { return dim_; }
    // |Phi^+|: positive roots counted with multiplicity, = dim - rank.
    int root_count() const { return dim_ - rank(); }
    const std::vector<RankOneFactor>& factors() const { return factors_; }
    std::vector<RestrictedRoot> roots() const;
    // Half-sum of positive roots with multiplicity, in chamber coordinates.
    std::vector<double> delta() const;
    double chamber_radius() const { return chamber_radius_; }
    // Constant of the polar integration formula relating Lebesgue measure on
    // p* to chamber x orbit coordinates: product of unit-sphere areas.
    double measure_constant() const;
    // Offset of factor f in full (dim-sized) coordinates.
    int factor_offset(int f) const { return offsets_[f]; }

    // Weyl dimension of the class-1 weight w; a positive integer for the
    // built-in models.
    double weyl_dim(const WeightPoint& w) const;
    // prod_alpha alpha(H)^{m_alpha}; vanishes exactly on chamber walls.
    double density(const CartanPoint& H) const;
    // lim_t d_{[tZ]} / t^{|Phi^+|} = prod over ambient roots of
    // alpha(Z) / <alpha, delta>; zero when Z lies on a wall.
    double dim_scaling_limit(const CartanPoint& Z) const;

    void require_rank(int r, const char* what) const;

private:
    SymmetricSpaceModel() = default;
    void finalize();

    std::string name_;
    std::vector<RankOneFactor> factors_;
    std::vector<int> offsets_;
    int dim_ = 0;
    double chamber_radius_ = 0.0;
};

}  // namespace sphmult
