#ifndef OSTAR_INTEGRATE_HPP
#define OSTAR_INTEGRATE_HPP

#include <functional>
#include <optional>
#include <string>

#include "ostar/geometry.hpp"
#include "ostar/orlicz.hpp"
#include "ostar/quadrature.hpp"

namespace ostar {

/// V_n(K) = (1/n) sum w_i rho(u_i)^n.
double volume(const StarBody& k, const SphericalRule& rule);

/// Monte Carlo standard error of the volume estimate; 0 for deterministic
/// rules (they carry no sampling noise model).
double volume_standard_error(const StarBody& k, const SphericalRule& rule);

/// Integral of f against the dual cone probability measure of K:
/// sum w_i f(u_i) rho(u_i)^n / (n V_n(K)). Requires positive volume.
double dual_cone_integral(const StarBody& k,
                          const std::function<double(const Direction&)>& f,
                          const SphericalRule& rule);

struct MixedVolumeReport {
    double value = 0.0;
    std::string rule;
    double ratio_min = 0.0; // min over nodes of rho_L / rho_K
    double ratio_max = 0.0;
};

/// Unary integrand for the dual Orlicz mixed volume. Either an Orlicz-class
/// function or a plain real-valued oracle on (0,inf) such as log.
struct MixedIntegrand {
    std::function<double(double)> f;
    bool defined_at_zero = false; // domain includes t = 0
    std::string name;
    std::optional<Curvature> phi0_curvature; // of t -> f(t^{1/n})
};

MixedIntegrand make_mixed_integrand(const OrliczFunction& phi, int n);
/// Descriptors: "power:p" (t^p, any real p != 0), "log", or any unary
/// registry descriptor. n fixes the phi0 curvature tag.
MixedIntegrand make_mixed_integrand(const std::string& descriptor, int n);

/// V~_phi(K, L) = (1/n) sum w_i phi(rho_L/rho_K) rho_K^n. rho_K must be
/// positive at every node; rho_L as well unless phi is defined at 0.
MixedVolumeReport dual_orlicz_mixed_volume(const MixedIntegrand& phi,
                                           const StarBody& k, const StarBody& l,
                                           const SphericalRule& rule);

/// V~_p(K, L) = (1/n) sum w_i rho_K^{n-p} rho_L^p.
double dual_p_mixed_volume(const StarBody& k, const StarBody& l, double p,
                           const SphericalRule& rule);

struct IntersectionRadial {
    double value = 0.0;
    double excluded_fraction = 0.0; // surface measure with |u.v| < eta
    bool guarded = false;           // general-phi path taken
};

/// Radial of the Orlicz intersection body at u: the infimal lambda with
/// integral over K of phi(1/(lambda |u.x|)) dx <= 1, by polar decomposition.
/// Power mode (phi = t^p, 0 < p < 1) uses the closed-form inner integral;
/// the general path integrates the ray by 32-point Gauss-Legendre and
/// bisects in lambda, and is flagged "guarded".
IntersectionRadial intersection_body_radial_power(const StarBody& k, double p,
                                                  const Direction& u,
                                                  const SphericalRule& rule,
                                                  double eta = 1e-3);

IntersectionRadial intersection_body_radial(const OrliczFunction& phi,
                                            const StarBody& k,
                                            const Direction& u,
                                            const SphericalRule& rule,
                                            double eta = 1e-3);

} // namespace ostar

#endif // OSTAR_INTEGRATE_HPP
