#pragma once

#include <functional>
#include <vector>

namespace sphmult {

// Fixed Gauss-Legendre rule on an interval (lo, hi). Nodes are strictly
// increasing and strictly interior; weights are positive and sum to hi - lo.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double lo = 0.0;
    double hi = 0.0;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

// n-point Gauss-Legendre rule mapped to (lo, hi); exact for polynomials of
// degree <= 2n-1. Throws std::domain_error if lo >= hi or n < 1.
QuadratureRule gauss_legendre(int n, double lo, double hi);

// C_n^alpha(x) / C_n^alpha(1) for alpha > -1/2, |x| <= 1, via the normalized
// three-term recurrence
//   R_0 = 1,  R_1 = x,
//   R_n = (2(n+alpha-1) x R_{n-1} - (n-1) R_{n-2}) / (n + 2 alpha - 1).
// alpha = 1/2 gives Legendre P_n, alpha = 1 gives U_n/(n+1), and alpha = 0
// degenerates to the Chebyshev limit cos(n arccos x).
// Throws std::domain_error if |x| > 1 or alpha <= -1/2.
double gegenbauer_normalized(long long n, double alpha, double x);

// Normalized Bessel function Gamma(nu+1) (2/x)^nu J_nu(x), equal to 1 at
// x = 0 and bounded by 1 in magnitude for nu >= 0. Even in x. Power series
// below the x = 12 switchover, cyl_bessel_j above.
double bessel_j_normalized(double nu, double x);

}  // namespace sphmult
