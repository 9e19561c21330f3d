#ifndef OSTAR_ORLICZ_HPP
#define OSTAR_ORLICZ_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ostar/geometry.hpp"

namespace ostar {

enum class FnClass { Phi, Psi };

/// Curvature of phi_0(x) = phi(x^{1/n} componentwise), declared per target
/// dimension. Drives the direction of the Brunn-Minkowski-type checks.
enum class Curvature { Concave, Convex, StrictlyConcave, StrictlyConvex, None };

std::string to_string(Curvature c);

/// An m-ary Orlicz-class function. Phi: [0,inf)^m -> [0,inf), strictly
/// increasing in each component, phi(o) = 0, phi(tx) -> inf. Psi:
/// (0,inf)^m -> (0,inf), strictly decreasing, phi(tx) -> inf as t -> 0 and
/// -> 0 as t -> inf. Membership is spot-checked on a dyadic probe grid at
/// construction; oracles cannot be verified symbolically.
class OrliczFunction {
public:
    struct Options {
        std::optional<bool> convex;
        std::optional<Curvature> phi0_curvature;
        std::optional<double> left_deriv_at_1;  // arity 1 only
        std::optional<double> right_deriv_at_1; // arity 1 only
        std::string name;
    };

    OrliczFunction(int arity, FnClass cls,
                   std::function<double(std::span<const double>)> eval,
                   Options opt = {});

    double operator()(std::span<const double> x) const;
    double eval1(double x) const; // arity-1 shortcut

    int arity() const { return arity_; }
    FnClass fn_class() const { return class_; }
    bool normalized() const { return normalized_; }
    const std::string& name() const { return name_; }
    std::optional<bool> convex_flag() const { return convex_; }
    std::optional<Curvature> phi0_curvature() const { return curvature_; }

    /// Signed one-sided derivative at 1 (arity 1). Positive for Phi,
    /// negative for Psi. Estimated by one-sided finite differences with
    /// Richardson combination when not supplied; `estimated` reports which.
    double deriv_at_1(bool left, bool* estimated = nullptr) const;

private:
    void spot_check_membership();

    int arity_;
    FnClass class_;
    std::function<double(std::span<const double>)> eval_;
    bool normalized_ = false;
    std::optional<bool> convex_;
    std::optional<Curvature> curvature_;
    std::optional<double> dleft_, dright_;
    std::string name_;
};

/// Finite discrete measure on m-tuples of star bodies (the only measures in
/// scope). All tuples share dimension and arity.
struct DiscreteStarMeasure {
    struct Atom {
        double weight;
        std::vector<StarBody> bodies;
    };
    std::vector<Atom> atoms;

    int arity() const;
    int dimension() const;
    double total_weight() const;
    void validate() const;
};

/// One additive term weight * phi(r / lambda) of a level function.
struct LevelTerm {
    const OrliczFunction* phi;
    double weight;
    std::vector<double> r;
};

/// Bracket data for the level solver: tau solves the diagonal equation
/// sum_j w_j phi_j(tau, ..., tau) = target; [lo, hi] brackets lambda.
struct SolveBracket {
    double tau;
    double lo;
    double hi;
};

/// tau > 0 with sum_j w_j phi_j(t * ones) = target along the diagonal.
double level_tau(std::span<const LevelTerm> terms, double target = 1.0);

/// Sign-change bracket for the level equation, seeded at max_j r_j / tau and
/// expanded geometrically (factor 2, capped at 200 doublings).
SolveBracket level_bracket(std::span<const LevelTerm> terms, double target = 1.0,
                           std::optional<double> precomputed_tau = std::nullopt);

/// Solves sum_j w_j phi_j(r_j / lambda) = target for the unique lambda > 0
/// by bisection on a SolveBracket (Phi: level decreasing in lambda; Psi:
/// increasing). Returns 0 for Phi when every r entry is 0. The residual of
/// the returned root satisfies |level - target| <= 1e-12 * target.
double solve_level_terms(std::span<const LevelTerm> terms, double target = 1.0,
                         std::optional<double> precomputed_tau = std::nullopt);

/// Level equation for a single function: phi(r / lambda) = target.
double solve_level(const OrliczFunction& phi, std::span<const double> r,
                   double target = 1.0);

/// Radial Orlicz sum: the star set whose radial at u solves
/// phi(rho_1(u)/lambda, ..., rho_m(u)/lambda) = 1.
StarBody orlicz_sum(const OrliczFunction& phi, const std::vector<StarBody>& bodies);

/// Orlicz combination under a finite discrete measure: radial at u solves
/// sum_atoms w * phi(rho's(u)/lambda) = 1. Reduces to orlicz_sum when mu is
/// a unit Dirac mass.
StarBody orlicz_combination_measure(const OrliczFunction& phi,
                                    const DiscreteStarMeasure& mu);

/// Radial Orlicz linear combination K +~_{phi,eps} L: radial at u solves
/// phi1(rho_K/lambda) + eps * phi2(rho_L/lambda) = 1.
StarBody orlicz_linear_combination(const OrliczFunction& phi1,
                                   const OrliczFunction& phi2,
                                   const StarBody& k, double eps,
                                   const StarBody& l);

/// Radial log combination: rho = rho_K^{1-t} * rho_L^t, t in (0,1).
/// This is the only member of the extended increasing class in scope.
StarBody log_combination(const StarBody& k, const StarBody& l, double t);

struct AssociativityReport {
    double max_gap;
    Direction argmax;
};

/// max over probe nodes of |rho_{(K+L)+M} - rho_{K+(L+M)}| for a binary phi.
/// Vanishes exactly when the addition is p-th radial addition.
AssociativityReport check_associativity(const OrliczFunction& phi,
                                        const StarBody& k, const StarBody& l,
                                        const StarBody& m_body,
                                        const SphericalRule& probe);

/// Built-in function registry. Descriptors: "lp:p" (sum of p-th powers,
/// p > 0), "psi-lp:p" (p < 0), "sum-powers:p1,p2", "poly:c1,c2"
/// (c1 t + c2 t^2, normalized). phi0 curvature is filled in for the target
/// dimension n. "log-t:t" is not an Orlicz function; see log_combination.
OrliczFunction make_registry_function(const std::string& descriptor, int arity,
                                      int n);

/// True if the descriptor names the log combination ("log-t:t"); the
/// parameter t is written through.
bool is_log_descriptor(const std::string& descriptor, double* t_out = nullptr);

} // namespace ostar

#endif // OSTAR_ORLICZ_HPP
