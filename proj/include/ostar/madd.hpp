#ifndef OSTAR_MADD_HPP
#define OSTAR_MADD_HPP

#include <optional>
#include <string>
#include <vector>

#include "ostar/geometry.hpp"
#include "ostar/orlicz.hpp"

namespace ostar {

/// Finite coefficient cloud in [0,inf)^m standing for a compact set M.
/// Its convex hull enters only through support-function maximization.
struct MSet {
    int arity = 0;
    std::vector<std::vector<double>> points;

    void validate() const;
};

/// lp-curve point set of coefficient pairs ((1-t)^{1/p'}, t^{1/p'}) with
/// 1/p + 1/p' = 1, sampled at `samples` t-values; realizes p-th radial
/// addition for p > 1.
MSet make_lp_curve_mset(double p, int samples);

/// h_{conv M}(z) = max over points of the dot product, z in [0,inf)^m.
double support_conv(const MSet& m, std::span<const double> z);

/// Radial M-sum: radial(u) = h_{conv M}(rho_1(u), ..., rho_m(u)).
StarBody radial_m_sum(const MSet& m, const std::vector<StarBody>& bodies);

/// Coefficient set realizing a convex binary Orlicz addition as a radial
/// M-addition: boundary points of the polar of the unit level body of phi,
/// one per direction on a uniform positive-quadrant angular grid. Support
/// values over the level curve {phi = 1} are found by golden-section search
/// seeded from a coarse scan; level-curve points come from solve_level
/// along rays.
MSet m_set_from_phi(const OrliczFunction& phi, int resolution);

struct SublinearityReport {
    std::optional<std::pair<std::vector<double>, std::vector<double>>> witness;
    double gap = 0.0; // g(z1+z2) - g(z1) - g(z2) at the witness
};

/// Searches a grid of z1, z2 >= 0 for g(z1+z2) > g(z1) + g(z2) + 1e-9,
/// where g(s,t) solves phi(s/lambda, t/lambda) = 1. A witness shows the
/// addition is not a radial M-addition for any M.
SublinearityReport check_sublinearity_counterexample(const OrliczFunction& phi);

} // namespace ostar

#endif // OSTAR_MADD_HPP
