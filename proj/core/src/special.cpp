#include "sphmult/special.hpp"

#include <cmath>
#include <stdexcept>

namespace sphmult {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
    if (n < 1) throw std::domain_error("gauss_legendre: need n >= 1");
    if (!(lo < hi)) throw std::domain_error("gauss_legendre: need lo < hi");

    QuadratureRule rule;
    rule.lo = lo;
    rule.hi = hi;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on P_n over [-1,1], symmetric pairs filled together.
    const int m = (n + 1) / 2;
    const double xm = 0.5 * (hi + lo);
    const double xl = 0.5 * (hi - lo);
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[n - 1 - i] = xm + xl * z;
        double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double gegenbauer_normalized(long long n, double alpha, double x) {
    if (n < 0) throw std::domain_error("gegenbauer_normalized: need n >= 0");
    if (!(alpha > -0.5)) throw std::domain_error("gegenbauer_normalized: need alpha > -1/2");
    if (std::abs(x) > 1.0 + 1e-12) throw std::domain_error("gegenbauer_normalized: need |x| <= 1");
    x = std::clamp(x, -1.0, 1.0);

    if (n == 0) return 1.0;
    double rm1 = 1.0;  // R_0
    double r = x;      // R_1
    for (long long k = 2; k <= n; ++k) {
        double next = (2.0 * (k + alpha - 1.0) * x * r - (k - 1.0) * rm1) / (k + 2.0 * alpha - 1.0);
        rm1 = r;
        r = next;
    }
    return r;
}

namespace {

// sum_k (-1)^k (x^2/4)^k / (k! (nu+1)...(nu+k)); converges fast for x < 12.
double bessel_norm_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -q / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return sum;
}

}  // namespace

double bessel_j_normalized(double nu, double x) {
    if (nu < 0.0) throw std::domain_error("bessel_j_normalized: need nu >= 0");
    x = std::abs(x);
    if (x < 12.0) return bessel_norm_series(nu, x);
    return std::tgamma(nu + 1.0) * std::pow(2.0 / x, nu) * std::cyl_bessel_j(nu, x);
}

}  // namespace sphmult
