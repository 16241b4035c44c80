// Acceptance suite: runs every gate criterion at its declared tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failures.

#include "sphmult/contraction.hpp"
#include "sphmult/fourier.hpp"
#include "sphmult/model.hpp"
#include "sphmult/norms.hpp"
#include "sphmult/spherical.hpp"
#include "sphmult/transfer.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace sphmult;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] %2d. %-38s %s (%.2f s)\n", pass ? "PASS" : "FAIL", idx, name,
                detail.c_str(), seconds);
    if (!pass) ++failures;
}

template <class F>
void criterion(int idx, const char* name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = f(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, pass, detail, secs);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

unsigned long long binom(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// classical dimension of degree-n harmonics on S^d
unsigned long long sphere_dim(int d, int n) {
    if (n == 0) return 1;
    return binom(n + d, d) - binom(n + d - 2, d);
}

std::vector<double> axis_vec(const SymmetricSpaceModel& m, double v) {
    std::vector<double> X(m.dim(), 0.0);
    X[0] = v;
    return X;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. contraction limit of su2 spherical functions, rate ~ 1/t
bool c1_lemma_su2(std::string& detail) {
    auto g = SymmetricSpaceModel::su2();
    std::vector<double> ts{50, 100, 200, 400, 800};
    std::vector<double> zero(g.dim(), 0.0);
    bool ok = true;
    double wslope = -1.0;
    for (double z : {0.5, 1.0, 2.0}) {
        for (double th : {0.3, 0.8, 1.2}) {
            auto rep = lemma_limit_check(g, CartanPoint({z}), axis_vec(g, th), zero, ts);
            ok = ok && rep.errors_strictly_decreasing();
            ok = ok && rep.slope >= -1.3 && rep.slope <= -0.7;
            if (std::abs(rep.slope + 1.0) > std::abs(wslope + 1.0)) wslope = rep.slope;
        }
    }
    detail = "worst slope " + fmt(wslope);
    return ok;
}

// 2. Mehler-Heine on sphere(2), plus the Bessel-zero spot check
bool c2_mehler_heine(std::string& detail) {
    auto s2 = SymmetricSpaceModel::sphere(2);
    std::vector<double> ts{50, 100, 200, 400, 800};
    std::vector<double> zero(s2.dim(), 0.0);
    bool ok = true;
    double wslope = -1.0;
    for (double z : {0.5, 1.0, 2.0}) {
        for (double th : {0.3, 0.8, 1.2}) {
            auto rep = lemma_limit_check(s2, CartanPoint({z}), axis_vec(s2, th), zero, ts);
            ok = ok && rep.errors_strictly_decreasing();
            ok = ok && rep.slope >= -1.3 && rep.slope <= -0.7;
            if (std::abs(rep.slope + 1.0) > std::abs(wslope + 1.0)) wslope = rep.slope;
        }
    }
    // at the first zero of J_0 the t = 800 Legendre value must be < 0.01
    const double j01 = 2.404825557695773;
    const double z = 2.0, th = j01 / z;
    auto w = floor_weight(800.0, CartanPoint({z})).weight;
    double val = phi(s2, w, CartanPoint({th / 800.0}));
    ok = ok && std::abs(val) < 0.01;
    detail = "worst slope " + fmt(wslope) + ", |P at Bessel zero| " + fmt(std::abs(val));
    return ok;
}

// 3. Weyl dimensions equal the classical oracle exactly
bool c3_weyl_dims(std::string& detail) {
    auto s2 = SymmetricSpaceModel::sphere(2);
    auto s3 = SymmetricSpaceModel::sphere(3);
    auto g = SymmetricSpaceModel::su2();

    auto su2_dim = [](int n) {
        return static_cast<unsigned long long>(n + 1) * (n + 1);
    };
    long checked = 0;
    bool ok = true;
    for (int n = 0; n <= 20; ++n) {
        ok = ok && std::llround(s2.weyl_dim(WeightPoint({n}))) == (long long)sphere_dim(2, n);
        ok = ok && std::llround(s3.weyl_dim(WeightPoint({n}))) == (long long)sphere_dim(3, n);
        ok = ok && std::llround(g.weyl_dim(WeightPoint({n}))) == (long long)su2_dim(n);
        checked += 3;
    }
    struct Pair {
        SymmetricSpaceModel model;
        std::function<unsigned long long(int)> a, b;
    };
    std::function<unsigned long long(int)> d2 = [](int n) { return sphere_dim(2, n); };
    std::function<unsigned long long(int)> d3 = [](int n) { return sphere_dim(3, n); };
    std::function<unsigned long long(int)> dg = su2_dim;
    std::vector<Pair> pairs;
    pairs.push_back({SymmetricSpaceModel::product(s2, s3), d2, d3});
    pairs.push_back({SymmetricSpaceModel::product(s2, g), d2, dg});
    pairs.push_back({SymmetricSpaceModel::product(s3, g), d3, dg});
    for (const auto& pr : pairs) {
        for (int n = 0; n <= 20; ++n) {
            for (int k = 0; k <= 20; ++k) {
                long long want = (long long)(pr.a(n) * pr.b(k));
                ok = ok && std::llround(pr.model.weyl_dim(WeightPoint({n, k}))) == want;
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " weights exact";
    return ok;
}

// 4. d_{[tZ]} / t^{|Phi+|} approaches the dimension-scaling limit
bool c4_dim_scaling(std::string& detail) {
    std::vector<SymmetricSpaceModel> models;
    models.push_back(SymmetricSpaceModel::sphere(2));
    models.push_back(SymmetricSpaceModel::sphere(3));
    models.push_back(SymmetricSpaceModel::su2());
    models.push_back(SymmetricSpaceModel::from_name("product:sphere:2,sphere:3"));
    models.push_back(SymmetricSpaceModel::from_name("product:sphere:2,su2"));
    models.push_back(SymmetricSpaceModel::from_name("product:sphere:3,su2"));

    const double zs[5] = {0.3, 0.7, 1.1, 1.6, 2.2};
    bool ok = true;
    double worst = 0.0;
    for (const auto& m : models) {
        for (int i = 0; i < 5; ++i) {
            std::vector<double> zc(m.rank());
            for (int f = 0; f < m.rank(); ++f) zc[f] = zs[(i + f * 2) % 5];
            CartanPoint Z(zc);
            double limit = m.dim_scaling_limit(Z);
            double prev = 1e300;
            for (double t : {1e2, 1e3, 1e4}) {
                double scaled = m.weyl_dim(floor_weight(t, Z).weight) /
                                std::pow(t, m.root_count());
                double err = std::abs(scaled - limit);
                ok = ok && err < prev;
                prev = err;
            }
            double rel = prev / limit;
            worst = std::max(worst, rel);
            ok = ok && rel < 0.01;
        }
    }
    detail = "worst rel err at t=1e4: " + fmt(worst);
    return ok;
}

// 5. transform round trips and the su2 Gaussian closed form
bool c5_fourier(std::string& detail) {
    double worst_rt = 0.0;
    for (const char* name : {"su2", "sphere:2"}) {
        auto m = SymmetricSpaceModel::from_name(name);
        auto xi = unit_mass(m, make_smooth_bump(0.5));
        auto zrad = choose_inverse_radius(m, xi, 200);
        auto xhat = transform_profile(m, xi, zrad, 200);
        InverseTransform inv(m, xhat, 600);
        for (double th = 0.0; th <= 0.6; th += 0.02) {
            double e = std::abs(inv.at(CartanPoint({th})) - xi.value1d(th));
            worst_rt = std::max(worst_rt, e);
        }
    }
    auto g = SymmetricSpaceModel::su2();
    ForwardTransform F(g, make_gaussian_profile(1.0, 6.5), 200);
    double worst_gauss = 0.0;
    for (double z = 0.0; z <= 6.0; z += 0.25) {
        double want = std::pow(2.0 * M_PI, 1.5) * std::exp(-0.5 * z * z);
        worst_gauss = std::max(worst_gauss, std::abs(F.at(CartanPoint({z})) - want));
    }
    detail = "round trip sup " + fmt(worst_rt) + ", gaussian err " + fmt(worst_gauss);
    return worst_rt < 1e-5 && worst_gauss < 1e-6;
}

// 6. backward transference on su2: m_t(lambda_[tz]) -> xi_hat(z) at rate 1/t
bool c6_backward(std::string& detail) {
    auto g = SymmetricSpaceModel::su2();
    auto xi = unit_mass(g, make_smooth_bump(0.5));
    std::vector<double> ts{20, 40, 80, 160, 320};
    bool ok = true;
    double worst_z0 = 0.0, wslope = -1.0;
    for (double z : {0.0, 0.5, 1.0, 2.0}) {
        auto rep = backward_limit_check(g, xi, CartanPoint({z}), ts);
        if (z == 0.0) {
            for (double e : rep.errors) worst_z0 = std::max(worst_z0, e);
            ok = ok && worst_z0 <= 1e-8;
        } else {
            ok = ok && rep.errors_strictly_decreasing();
            ok = ok && rep.slope >= -1.3 && rep.slope <= -0.7;
            if (std::abs(rep.slope + 1.0) > std::abs(wslope + 1.0)) wslope = rep.slope;
        }
    }
    detail = "z=0 err " + fmt(worst_z0) + ", worst slope " + fmt(wslope);
    return ok;
}

// 7. forward transference: dilation family recovers its symbol at rate 1/t
bool c7_forward(std::string& detail) {
    auto g = SymmetricSpaceModel::su2();
    auto m = [](const CartanPoint& Z) { return std::exp(-Z.norm2() * Z.norm2()); };
    auto fam = dilation_family(g, m, "gauss");
    const double grad_inf = std::sqrt(2.0 / std::exp(1.0));
    bool ok = true;
    double worst6 = 0.0;
    const double zs[] = {0.25, 0.5, 0.7853981633974483, 1.0, 1.5, 2.0};
    for (double z : zs) {
        CartanPoint Z({z});
        for (double t : {1e2, 1e3, 1e4, 1e5, 1e6}) {
            double err = std::abs(fam.eval(t, floor_weight(t, Z).weight) - m(Z));
            ok = ok && err <= 2.0 * grad_inf / t;
        }
        double e6 = std::abs(fam.eval(1e6, floor_weight(1e6, Z).weight) - m(Z));
        worst6 = std::max(worst6, e6);
        ok = ok && e6 <= 1e-6;
    }
    // regularized family reproduces e^{-eps|Z|^2} * limit at the same tolerance
    const double eps = 0.5;
    auto reg = gaussian_regularize(fam, eps);
    for (double z : zs) {
        CartanPoint Z({z});
        double want = std::exp(-(1.0 + eps) * z * z);
        double err = std::abs(reg.eval(1e6, floor_weight(1e6, Z).weight) - want);
        worst6 = std::max(worst6, err);
        ok = ok && err <= 1e-6;
    }
    detail = "worst err at t=1e6: " + fmt(worst6);
    return ok;
}

// 8. Plancherel consistency of the norm estimates
bool c8_plancherel(std::string& detail) {
    auto g = SymmetricSpaceModel::su2();
    auto trials = default_flat_trials(g);
    bool ok = true;
    double worst_dev = 0.0;

    auto one = [](const CartanPoint&) { return 1.0; };
    for (double p : {1.5, 2.0, 3.0}) {
        double dev = std::abs(lp_lower_bound_flat(g, one, p, trials).value - 1.0);
        worst_dev = std::max(worst_dev, dev);
        ok = ok && dev <= 1e-8;
    }

    auto xi = unit_mass(g, make_smooth_bump(0.5));
    ForwardTransform F(g, xi, 200);
    std::vector<std::function<double(const CartanPoint&)>> symbols;
    symbols.emplace_back([](const CartanPoint& Z) {
        return 0.5 * (1.0 + std::tanh((1.0 - Z.norm2()) / 0.2));
    });
    symbols.emplace_back([&F](const CartanPoint& Z) { return F.at(Z); });
    symbols.emplace_back([](const CartanPoint&) { return -0.7; });
    symbols.emplace_back(one);
    for (const auto& sym : symbols) {
        std::vector<double> table;
        for (double z = 0.0; z <= 60.0; z += 0.01) table.push_back(sym(CartanPoint({z})));
        double sup = l2_norm(table).value;
        double lb = lp_lower_bound_flat(g, sym, 2.0, trials).value;
        ok = ok && lb <= sup + 1e-6;
    }
    detail = "identity dev " + fmt(worst_dev) + ", p=2 bounds respected";
    return ok;
}

// 9. p = 2 transference norm agreement via symbol sups
bool c9_p2_agreement(std::string& detail) {
    auto g = SymmetricSpaceModel::su2();
    auto xi = unit_mass(g, make_smooth_bump(0.5));
    ForwardTransform F(g, xi, 200);
    double sup_flat = 0.0, sup_mt = 0.0;
    for (double z = 0.0; z <= 2.0 + 1e-12; z += 0.25) {
        sup_flat = std::max(sup_flat, std::abs(F.at(CartanPoint({z}))));
        sup_mt = std::max(sup_mt, std::abs(backward_mt(g, xi, 320.0, CartanPoint({z}))));
    }
    double gap = std::abs(sup_flat - sup_mt);
    detail = "gap " + fmt(gap);
    return gap < 1e-2;
}

// 10. CLI determinism: identical configs, byte-identical CSVs
bool c10_determinism(std::string& detail) {
    auto base = fs::temp_directory_path() / "sphmult_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    auto a = base / "a", b = base / "b";
    std::string cli = SPHMULT_CLI_PATH;
    auto run = [&](const std::string& args) {
        return std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    };
    bool ok = true;
    ok = ok && run("backward --model su2 --t-grid 10:40:3log --quad-order 100 --out-dir " +
                   a.string()) == 0;
    ok = ok && run("backward --model su2 --t-grid 10:40:3log --quad-order 100 --out-dir " +
                   b.string()) == 0;
    ok = ok && slurp(a / "backward_errors.csv") == slurp(b / "backward_errors.csv");

    auto c = base / "c", d = base / "d";
    ok = ok && run("lemma --model su2 --out-dir " + c.string()) == 0;
    ok = ok && run("lemma --model su2 --out-dir " + d.string()) == 0;
    ok = ok && slurp(c / "lemma_errors.csv") == slurp(d / "lemma_errors.csv");
    detail = ok ? "byte-identical CSVs" : "outputs differ or runs failed";
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance criteria\n-------------------\n");

    auto timed = [](const char* name, int idx, bool (*fn)(std::string&), double budget) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (budget > 0.0 && secs >= budget) {
            pass = false;
            detail += " [over runtime budget " + fmt(budget) + " s]";
        }
        report(idx, name, pass, detail, secs);
    };

    timed("lemma convergence (su2)", 1, c1_lemma_su2, 5.0);
    timed("Mehler-Heine (sphere 2)", 2, c2_mehler_heine, 5.0);
    timed("Weyl dimensions exact", 3, c3_weyl_dims, 0.0);
    timed("dimension scaling", 4, c4_dim_scaling, 0.0);
    timed("Fourier round trip", 5, c5_fourier, 0.0);
    timed("backward transference", 6, c6_backward, 60.0);
    timed("forward transference", 7, c7_forward, 0.0);
    timed("Plancherel consistency", 8, c8_plancherel, 0.0);
    timed("p=2 norm agreement", 9, c9_p2_agreement, 0.0);
    timed("CLI determinism", 10, c10_determinism, 0.0);

    std::printf("-------------------\n%s (%d failure%s)\n", failures == 0 ? "ALL PASS" : "FAILED",
                failures, failures == 1 ? "" : "s");
    return failures;
}
