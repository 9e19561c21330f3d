#ifndef OSTAR_INEQUALITIES_HPP
#define OSTAR_INEQUALITIES_HPP

#include <string>
#include <vector>

#include "ostar/geometry.hpp"
#include "ostar/integrate.hpp"
#include "ostar/orlicz.hpp"
#include "ostar/quadrature.hpp"

namespace ostar {

enum class IneqDirection { GE, LE };

/// Result of one inequality check. slack is signed so that
/// satisfied <=> slack >= -tol; equality <=> |slack| <= eq_tol.
struct IneqReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    IneqDirection direction = IneqDirection::GE;
    double slack = 0.0;
    bool satisfied = false;
    bool equality = false;
    double tol = 0.0;
    double eq_tol = 0.0;
    std::string hypothesis; // phi0 curvature used, spot-check status
    std::string rule;
};

struct DilatateReport {
    bool is_dilatate = false;
    double ratio = 0.0; // mean of rho_L / rho_K over probe nodes
    std::string note;
};

struct VariationReport {
    double numeric_derivative = 0.0; // adopted slope
    double raw_slope = 0.0;          // smallest-eps difference quotient
    double analytic_value = 0.0;     // n V~_{phi2}(K,L) / phi1'(1)
    double relative_error = 0.0;
    std::vector<double> eps_schedule;
    bool extrapolated = false;    // Richardson value adopted
    bool deriv_estimated = false; // phi1'(1) came from finite differences
};

/// Default slack tolerances: 1e-9 for deterministic rules; Monte Carlo
/// rules widen tol to 4x a split-half error estimate of the slack.
constexpr double kSlackTol = 1e-9;
constexpr double kEqualityTol = 1e-8;

/// Dual Orlicz-Brunn-Minkowski check: with S the radial Orlicz sum,
/// lhs = phi((V(K_1)/V(S))^{1/n}, ..., (V(K_m)/V(S))^{1/n}) vs rhs = 1;
/// >= for concave phi0, <= for convex. Requires phi0_curvature declared.
IneqReport check_dual_orlicz_bm(const OrliczFunction& phi,
                                const std::vector<StarBody>& bodies,
                                const SphericalRule& rule);

/// Dual log-Brunn-Minkowski: V((1-t)K +~_0 tL) <= V(K)^{1-t} V(L)^t.
IneqReport check_dual_log_bm(const StarBody& k, const StarBody& l, double t,
                             const SphericalRule& rule);

/// Dual Orlicz-Minkowski: V~_phi(K,L) <= V(K) phi((V(L)/V(K))^{1/n}) for
/// concave phi0; reversed for convex.
IneqReport check_dual_orlicz_minkowski(const MixedIntegrand& phi,
                                       const StarBody& k, const StarBody& l,
                                       const SphericalRule& rule);

/// Dual log-Minkowski: integral of log(rho_L/rho_K) against the dual cone
/// measure of K <= (1/n) log(V(L)/V(K)).
IneqReport check_dual_log_minkowski(const StarBody& k, const StarBody& l,
                                    const SphericalRule& rule);

/// Polar form: integral of log(h_L/h_K) against the dual cone measure of
/// K-polar >= (1/n) log(V(K-polar)/V(L-polar)).
IneqReport check_polar_log(const ConvexBodySupport& ksupp,
                           const ConvexBodySupport& lsupp,
                           const SphericalRule& rule);

/// First variation of volume along the radial Orlicz linear combination:
/// slope of V(K +~_{phi,eps} L) at eps -> 0+ against
/// (1/phi1'(1)) sum w phi2(rho_L/rho_K) rho_K^n. Phi uses the left
/// derivative at 1 and needs K bounded away from o; Psi uses the right
/// derivative (negative for decreasing phi1) and needs K, L positive.
VariationReport first_variation_volume(const OrliczFunction& phi1,
                                       const OrliczFunction& phi2,
                                       const StarBody& k, const StarBody& l,
                                       const SphericalRule& rule,
                                       std::vector<double> eps_list = {});

/// True iff rho_L/rho_K is constant over the probe nodes to 1e-8 relative.
DilatateReport dilatate_test(const StarBody& k, const StarBody& l,
                             const SphericalRule& probe);

/// Midpoint-curvature spot check of t -> f(t^{1/n}) on a small grid.
/// Returns false when the sampled values contradict the declared tag.
bool curvature_spot_check(const std::function<double(double)>& f, int n,
                          Curvature declared);

// ---- seeded sweeps -----------------------------------------------------------

struct SweepSummary {
    std::string name;
    std::vector<IneqReport> reports;
    std::vector<std::uint64_t> seeds;
    double min_slack = 0.0;
    int violations = 0;
    int equality_cases = 0;
};

/// Named per-pair sweeps over seeded random bodies. Check names:
/// "dual-orlicz-bm" (needs phi), "dual-log-bm", "dual-orlicz-minkowski"
/// (needs phi descriptor), "dual-log-minkowski", "polar-log".
SweepSummary sweep_check(const std::string& check, int n, int count,
                         std::uint64_t base_seed, const SphericalRule& rule,
                         const std::string& phi_descriptor = "",
                         double t = 0.5);

} // namespace ostar

#endif // OSTAR_INEQUALITIES_HPP
