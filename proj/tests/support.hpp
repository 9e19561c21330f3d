#ifndef OSTAR_TESTS_SUPPORT_HPP
#define OSTAR_TESTS_SUPPORT_HPP

// Test-only oracles, independent of the library code paths they check.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

/// Dense trapezoid rule over [0, 2 pi); independent of SphericalRule.
inline double circle_integral(const std::function<double(double)>& f, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += f(2.0 * M_PI * i / n);
    return s * 2.0 * M_PI / n;
}

/// Plain scalar bisection on a bracketing interval.
inline double bisect(const std::function<double(double)>& f, double lo,
                     double hi, double tol = 1e-13) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("oracles::bisect: no sign change");
    while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace oracles

#endif // OSTAR_TESTS_SUPPORT_HPP
