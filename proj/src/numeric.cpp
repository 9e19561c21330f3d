#include "ostar/detail/numeric.hpp"

#include <cmath>

namespace ostar::detail {

double pairwise_sum(std::span<const double> v) {
    const size_t n = v.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; u1 bounded away from 0 so log is finite.
    double u1 = 0.0;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double sphere_surface_area(int n) {
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

} // namespace ostar::detail
