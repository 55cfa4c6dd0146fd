#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace wetlab {

/// Result of a refined quadrature pass.
struct QuadratureResult {
    double value = 0.0;
    bool converged = false;
    int subdivisions = 0;  // subcells per axis at the final level
};

namespace detail {

// 4-point Gauss-Legendre rule mapped to [0,1].
inline constexpr double kGaussNode[4] = {
    0.5 - 0.43056815579702629 /* sqrt((3+2*sqrt(6./5.))/7)/2 */,
    0.5 - 0.16999052179242816,
    0.5 + 0.16999052179242816,
    0.5 + 0.43056815579702629,
};
inline constexpr double kGaussWeight[4] = {
    0.17392742256872693,
    0.32607257743127305,
    0.32607257743127305,
    0.17392742256872693,
};

template <class F>
double tensor_gauss(const F& f, int n) {
    const double h = 1.0 / n;
    double sum = 0.0;
    for (int iy = 0; iy < n; ++iy) {
        for (int iz = 0; iz < n; ++iz) {
            for (int a = 0; a < 4; ++a) {
                const double Y = (iy + kGaussNode[a]) * h;
                for (int b = 0; b < 4; ++b) {
                    const double Z = (iz + kGaussNode[b]) * h;
                    sum += kGaussWeight[a] * kGaussWeight[b] * f(Y, Z);
                }
            }
        }
    }
    return sum * h * h;
}

}  // namespace detail

/// Integrates f over the unit cell [0,1]^2 with composite 4-point
/// Gauss-Legendre panels, doubling the panel count per axis until two
/// successive values agree to abs+rel tolerance.
template <class F>
QuadratureResult integrate_unit_cell(const F& f, double tol = 1e-8, int max_subdiv = 256) {
    QuadratureResult r;
    double prev = detail::tensor_gauss(f, 4);
    for (int n = 8; n <= max_subdiv; n *= 2) {
        const double cur = detail::tensor_gauss(f, n);
        r.value = cur;
        r.subdivisions = n;
        if (std::abs(cur - prev) < tol * (1.0 + std::abs(cur))) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    return r;
}

}  // namespace wetlab
