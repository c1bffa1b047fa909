#pragma once

// Small quadrature toolbox shared by the modules. Adaptive integration is
// delegated to Boost.Math; fixed Gauss–Legendre panels are used where the
// integrand is known to be smooth between breakpoints.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace nullvar::quad {

/// Fixed-order Gauss–Legendre rule on [a, b].
template <unsigned Points = 20, class F>
double gauss(F&& f, double a, double b) {
    return boost::math::quadrature::gauss<double, Points>::integrate(f, a, b);
}

/// Gauss–Legendre panels between consecutive sorted breakpoints, each panel
/// subdivided into `sub` equal pieces.
template <unsigned Points = 20, class F>
double panels(F&& f, std::vector<double> breaks, int sub = 1) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i];
        const double h = (breaks[i + 1] - a) / sub;
        if (h <= 0.0) continue;
        for (int k = 0; k < sub; ++k) total += gauss<Points>(f, a + k * h, a + (k + 1) * h);
    }
    return total;
}

/// Adaptive Gauss–Kronrod (61 points) to relative tolerance `tol`. The depth
/// cap bounds the work when roundoff keeps the error estimate above tol.
template <class F>
double adaptive(F&& f, double a, double b, double tol = 1e-13) {
    if (b <= a) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 10, tol);
}

/// Adaptive integration split at sorted breakpoints.
template <class F>
double adaptivePanels(F&& f, std::vector<double> breaks, double tol = 1e-13) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) total += adaptive(f, breaks[i], breaks[i + 1], tol);
    return total;
}

/// Double-exponential rule; tolerates integrable endpoint singularities.
template <class F>
double tanhSinh(F&& f, double a, double b, double tol = 1e-13) {
    if (b <= a) return 0.0;
    static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, tol);
}

}  // namespace nullvar::quad
