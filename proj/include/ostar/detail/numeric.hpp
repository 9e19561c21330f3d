#ifndef OSTAR_DETAIL_NUMERIC_HPP
#define OSTAR_DETAIL_NUMERIC_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ostar::detail {

/// Pairwise (tree) summation. Deterministic for a fixed value order, which
/// keeps quadrature results reproducible across worker counts.
double pairwise_sum(std::span<const double> v);

/// Uniform double in [0,1) from the top 53 bits of the engine output.
/// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Standard normal via Box-Muller on the explicit uniform above.
double gaussian(std::mt19937_64& rng);

/// Surface area of S^{n-1} in R^n.
double sphere_surface_area(int n);

} // namespace ostar::detail

#endif // OSTAR_DETAIL_NUMERIC_HPP
