#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sphmult/special.hpp"

#include <cmath>
#include <vector>

using namespace sphmult;

TEST_CASE("gauss_legendre basics") {
    auto r2 = gauss_legendre(2, 0.0, 1.0);
    CHECK(r2.integrate([](double x) { return x * x; }) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto r1 = gauss_legendre(3, 0.0, 2.0);
    CHECK(r1.integrate([](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));

    auto r20 = gauss_legendre(20, 0.0, M_PI);
    CHECK(r20.integrate([](double x) { return std::sin(x); }) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("gauss_legendre rule invariants") {
    for (int n : {1, 2, 5, 17, 64, 200}) {
        auto r = gauss_legendre(n, -0.5, 3.25);
        double wsum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            wsum += w;
        }
        CHECK(wsum == doctest::Approx(r.hi - r.lo).epsilon(1e-12));
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            CHECK(r.nodes[i] > r.lo);
            CHECK(r.nodes[i] < r.hi);
            if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
        }
    }
}

TEST_CASE("quadrature error decays with node count") {
    auto f = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
    double ref = gauss_legendre(200, 0.0, 2.0).integrate(f);
    double e8 = std::abs(gauss_legendre(8, 0.0, 2.0).integrate(f) - ref);
    double e16 = std::abs(gauss_legendre(16, 0.0, 2.0).integrate(f) - ref);
    double e32 = std::abs(gauss_legendre(32, 0.0, 2.0).integrate(f) - ref);
    CHECK(e16 < e8);
    CHECK(e32 < e16);
    CHECK(e32 < 1e-12);
}

namespace {

// Independent oracle: Gegenbauer by the explicit series
// C_n^a(x) = sum_k (-1)^k Gamma(a+n-k) / (Gamma(a) k! (n-2k)!) (2x)^{n-2k}.
double gegenbauer_series(int n, double a, double x) {
    double sum = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
        double term = std::tgamma(a + n - k) /
                      (std::tgamma(a) * std::tgamma(k + 1.0) * std::tgamma(n - 2 * k + 1.0));
        term *= std::pow(2.0 * x, n - 2 * k);
        sum += (k % 2 ? -term : term);
    }
    return sum;
}

}  // namespace

TEST_CASE("gegenbauer_normalized pinned values") {
    CHECK(gegenbauer_normalized(0, 0.7, 0.3) == 1.0);
    // Legendre: P_2(1/2) = (3/4 - 1)/2 = -1/8
    CHECK(gegenbauer_normalized(2, 0.5, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    // Chebyshev-U: U_1(x)/U_1(1) = x
    CHECK(gegenbauer_normalized(1, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK_THROWS_AS(gegenbauer_normalized(3, 0.5, 1.5), std::domain_error);
}

TEST_CASE("gegenbauer recurrence matches series expansion") {
    for (double a : {0.5, 1.0, 1.5, 2.3}) {
        for (int n = 0; n <= 10; ++n) {
            double cn1 = gegenbauer_series(n, a, 1.0);
            for (double x : {-1.0, -0.6, -0.1, 0.0, 0.25, 0.8, 1.0}) {
                double want = gegenbauer_series(n, a, x) / cn1;
                CHECK(gegenbauer_normalized(n, a, x) == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("gegenbauer alpha=0 is the Chebyshev limit") {
    for (int n : {0, 1, 2, 5, 9}) {
        for (double x : {-0.9, -0.3, 0.1, 0.7, 1.0}) {
            CHECK(gegenbauer_normalized(n, 0.0, x) ==
                  doctest::Approx(std::cos(n * std::acos(x))).epsilon(1e-12));
        }
    }
}

namespace {

// Power-series oracle for the normalized Bessel function, independent of
// the implementation's branch structure.
double bessel_norm_series_oracle(double nu, double x) {
    double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 200; ++k) {
        term *= -q / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-20) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("bessel_j_normalized pinned values") {
    CHECK(bessel_j_normalized(0.0, 0.0) == 1.0);

    // first zero of J_0, located by bisection on the series oracle
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (bessel_norm_series_oracle(0.0, mid) > 0.0) lo = mid;
        else hi = mid;
    }
    double root = 0.5 * (lo + hi);
    CHECK(root == doctest::Approx(2.404825557695773).epsilon(1e-12));
    CHECK(std::abs(bessel_j_normalized(0.0, 2.404825557695773)) < 1e-9);

    // nu = 1/2 is sin(x)/x
    CHECK(std::abs(bessel_j_normalized(0.5, M_PI)) < 1e-12);
    for (double x : {0.1, 1.0, 7.0, 20.0, 44.0})
        CHECK(bessel_j_normalized(0.5, x) == doctest::Approx(std::sin(x) / x).epsilon(1e-12));
}

TEST_CASE("bessel_j_normalized properties") {
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (double x = 0.0; x <= 60.0; x += 0.7) {
            double v = bessel_j_normalized(nu, x);
            CHECK(std::abs(v) <= 1.0 + 1e-12);
            CHECK(bessel_j_normalized(nu, -x) == v);  // even
        }
    }
}

TEST_CASE("bessel series and large-x branches agree at the switchover") {
    // the series oracle itself loses digits past x ~ 13, so stay close to 12
    for (double nu : {0.0, 0.5, 1.0, 1.5, 3.0}) {
        for (double x : {11.5, 11.9, 12.0, 12.1, 12.5}) {
            double want = bessel_norm_series_oracle(nu, x);
            CHECK(bessel_j_normalized(nu, x) == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("bessel large-x branch against half-integer closed forms") {
    // nu = 3/2: 3 (sin x - x cos x) / x^3
    for (double x : {15.0, 30.0, 50.0}) {
        double want = 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
        CHECK(bessel_j_normalized(1.5, x) == doctest::Approx(want).epsilon(1e-12));
    }
}
