#include "ostar/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ostar/quadrature.hpp"

namespace ostar {

namespace {

constexpr int kMaxDoublings = 200;
constexpr double kResidualTol = 1e-12;
constexpr double kWidthTol = 1e-13;

void check_domain(FnClass cls, std::span<const double> x) {
    for (double v : x) {
        if (std::isnan(v)) throw std::domain_error("OrliczFunction: NaN argument");
        if (cls == FnClass::Phi) {
            if (v < 0.0)
                throw std::domain_error("OrliczFunction: Phi argument must be >= 0");
        } else if (!(v > 0.0)) {
            throw std::domain_error("OrliczFunction: Psi argument must be > 0");
        }
    }
}

} // namespace

std::string to_string(Curvature c) {
    switch (c) {
        case Curvature::Concave: return "concave";
        case Curvature::Convex: return "convex";
        case Curvature::StrictlyConcave: return "strictly_concave";
        case Curvature::StrictlyConvex: return "strictly_convex";
        case Curvature::None: return "none";
    }
    throw std::logic_error("unreachable");
}

// ---- OrliczFunction ----------------------------------------------------------

OrliczFunction::OrliczFunction(
    int arity, FnClass cls, std::function<double(std::span<const double>)> eval,
    Options opt)
    : arity_(arity),
      class_(cls),
      eval_(std::move(eval)),
      convex_(opt.convex),
      curvature_(opt.phi0_curvature),
      dleft_(opt.left_deriv_at_1),
      dright_(opt.right_deriv_at_1),
      name_(std::move(opt.name)) {
    if (arity_ < 1) throw std::invalid_argument("OrliczFunction: arity must be >= 1");
    if (!eval_) throw std::invalid_argument("OrliczFunction: missing oracle");
    spot_check_membership();

    if (class_ == FnClass::Phi) {
        normalized_ = true;
        std::vector<double> e(static_cast<size_t>(arity_), 0.0);
        for (int j = 0; j < arity_ && normalized_; ++j) {
            e[static_cast<size_t>(j)] = 1.0;
            normalized_ = std::abs(eval_(e) - 1.0) <= 1e-12;
            e[static_cast<size_t>(j)] = 0.0;
        }
    } else {
        normalized_ = arity_ == 1 && std::abs(eval1(1.0) - 1.0) <= 1e-12;
    }
}

double OrliczFunction::operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != arity_)
        throw std::invalid_argument("OrliczFunction: arity mismatch");
    check_domain(class_, x);
    return eval_(x);
}

double OrliczFunction::eval1(double x) const {
    if (arity_ != 1) throw std::logic_error("OrliczFunction::eval1: arity != 1");
    return (*this)(std::span<const double>(&x, 1));
}

void OrliczFunction::spot_check_membership() {
    const bool phi = class_ == FnClass::Phi;
    std::vector<double> x(static_cast<size_t>(arity_));

    if (phi) {
        std::fill(x.begin(), x.end(), 0.0);
        const double at0 = eval_(x);
        if (!(std::abs(at0) <= 1e-12))
            throw std::invalid_argument("OrliczFunction: Phi must vanish at the origin");
    }

    // Dyadic sweep along one axis (or the diagonal for axis = -1). With a
    // nonzero cross level the per-step increment can fall below the
    // rounding of the cross term, so strictness is only enforced where
    // floating point can resolve it; every sweep must still be weakly
    // monotone with strict overall growth (or decay, for Psi).
    auto sweep = [&](int axis, double cross, bool strict_steps) {
        double prev = std::numeric_limits<double>::quiet_NaN();
        double first = 0.0, last = 0.0;
        for (int e = -20; e <= 20; ++e) {
            const double t = std::ldexp(1.0, e);
            for (int i = 0; i < arity_; ++i)
                x[static_cast<size_t>(i)] = (axis < 0 || i == axis) ? t : cross;
            const double v = eval_(x);
            if (std::isnan(v))
                throw std::invalid_argument("OrliczFunction: NaN on probe grid");
            if (e == -20) first = v;
            last = v;
            if (!std::isnan(prev)) {
                const bool both_inf = std::isinf(prev) && std::isinf(v);
                bool ok = phi ? v >= prev : v <= prev;
                if (strict_steps && !both_inf) ok = phi ? v > prev : v < prev;
                if (!ok)
                    throw std::invalid_argument(
                        "OrliczFunction: monotonicity spot check failed (" +
                        std::string(phi ? "Phi" : "Psi") + ")");
            }
            prev = v;
        }
        const bool both_inf = std::isinf(first) && std::isinf(last);
        if (!both_inf && !(phi ? last > first : last < first))
            throw std::invalid_argument(
                "OrliczFunction: monotonicity spot check failed (" +
                std::string(phi ? "Phi" : "Psi") + ")");
    };

    for (int axis = 0; axis < arity_; ++axis) {
        if (phi) {
            sweep(axis, 0.0, /*strict_steps=*/true);
            if (arity_ > 1) sweep(axis, 1.0, /*strict_steps=*/false);
        } else {
            sweep(axis, 1.0, /*strict_steps=*/false);
        }
    }
    if (arity_ > 1) sweep(-1, 0.0, /*strict_steps=*/true); // diagonal
}

double OrliczFunction::deriv_at_1(bool left, bool* estimated) const {
    if (arity_ != 1)
        throw std::logic_error("OrliczFunction::deriv_at_1: arity != 1");
    if (left && dleft_) {
        if (estimated) *estimated = false;
        return *dleft_;
    }
    if (!left && dright_) {
        if (estimated) *estimated = false;
        return *dright_;
    }
    auto diff = [&](double h) {
        return left ? (eval1(1.0) - eval1(1.0 - h)) / h
                    : (eval1(1.0 + h) - eval1(1.0)) / h;
    };
    // One-sided differences at h = 1e-5, 1e-6; first-order Richardson.
    const double d1 = diff(1e-5);
    const double d2 = diff(1e-6);
    if (estimated) *estimated = true;
    return (10.0 * d2 - d1) / 9.0;
}

// ---- DiscreteStarMeasure -----------------------------------------------------

int DiscreteStarMeasure::arity() const {
    return atoms.empty() ? 0 : static_cast<int>(atoms.front().bodies.size());
}

int DiscreteStarMeasure::dimension() const {
    return atoms.empty() || atoms.front().bodies.empty()
               ? 0
               : atoms.front().bodies.front().dimension;
}

double DiscreteStarMeasure::total_weight() const {
    double w = 0.0;
    for (const auto& a : atoms) w += a.weight;
    return w;
}

void DiscreteStarMeasure::validate() const {
    if (atoms.empty())
        throw std::invalid_argument("DiscreteStarMeasure: no atoms");
    const int m = arity();
    const int n = dimension();
    if (m < 1) throw std::invalid_argument("DiscreteStarMeasure: empty tuple");
    for (const auto& a : atoms) {
        if (!(a.weight > 0.0))
            throw std::invalid_argument("DiscreteStarMeasure: weights must be positive");
        if (static_cast<int>(a.bodies.size()) != m)
            throw std::invalid_argument("DiscreteStarMeasure: arity mismatch across atoms");
        for (const auto& b : a.bodies)
            if (b.dimension != n)
                throw std::invalid_argument("DiscreteStarMeasure: dimension mismatch");
    }
    if (!(total_weight() > 0.0) || !std::isfinite(total_weight()))
        throw std::invalid_argument("DiscreteStarMeasure: bad total weight");
}

// ---- level solver ------------------------------------------------------------

namespace {

FnClass terms_class(std::span<const LevelTerm> terms) {
    if (terms.empty()) throw std::invalid_argument("solve_level: no terms");
    const FnClass cls = terms.front().phi->fn_class();
    for (const auto& t : terms) {
        if (t.phi == nullptr) throw std::invalid_argument("solve_level: null phi");
        if (t.phi->fn_class() != cls)
            throw std::invalid_argument("solve_level: mixed Phi/Psi terms");
        if (!(t.weight > 0.0))
            throw std::invalid_argument("solve_level: weights must be positive");
        if (static_cast<int>(t.r.size()) != t.phi->arity())
            throw std::invalid_argument("solve_level: r length != arity");
    }
    return cls;
}

double diagonal_value(std::span<const LevelTerm> terms, double t) {
    double s = 0.0;
    std::vector<double> x;
    for (const auto& term : terms) {
        x.assign(term.r.size(), t);
        s += term.weight * (*term.phi)(x);
    }
    return s;
}

double level_value(std::span<const LevelTerm> terms, double lambda,
                   std::vector<double>& scratch) {
    double s = 0.0;
    for (const auto& term : terms) {
        scratch.resize(term.r.size());
        for (size_t i = 0; i < term.r.size(); ++i) scratch[i] = term.r[i] / lambda;
        s += term.weight * (*term.phi)(scratch);
    }
    return s;
}

} // namespace

double level_tau(std::span<const LevelTerm> terms, double target) {
    const FnClass cls = terms_class(terms);
    if (!(target > 0.0)) throw std::invalid_argument("level_tau: target must be > 0");
    const bool increasing = cls == FnClass::Phi; // diagonal value vs t

    double lo = 1.0, hi = 1.0;
    double vlo = diagonal_value(terms, lo);
    if (vlo == target) return lo;
    // Grow the bracket away from t = 1 until the target is straddled.
    if ((vlo < target) == increasing) {
        for (int i = 0; i < kMaxDoublings; ++i) {
            hi *= 2.0;
            const double v = diagonal_value(terms, hi);
            if (v == target) return hi;
            if ((v > target) == increasing) break;
            lo = hi;
            if (i + 1 == kMaxDoublings)
                throw std::runtime_error("level_tau: bracket expansion diverged");
        }
    } else {
        for (int i = 0; i < kMaxDoublings; ++i) {
            lo *= 0.5;
            const double v = diagonal_value(terms, lo);
            if (v == target) return lo;
            if ((v < target) == increasing) break;
            hi = lo;
            if (i + 1 == kMaxDoublings)
                throw std::runtime_error("level_tau: bracket expansion diverged");
        }
    }
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double v = diagonal_value(terms, mid);
        if (v == target) return mid;
        if ((v < target) == increasing)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * mid) break;
    }
    return 0.5 * (lo + hi);
}

SolveBracket level_bracket(std::span<const LevelTerm> terms, double target,
                           std::optional<double> precomputed_tau) {
    const FnClass cls = terms_class(terms);
    const bool increasing = cls == FnClass::Psi; // level value vs lambda
    double rmax = 0.0;
    double rmin = std::numeric_limits<double>::infinity();
    for (const auto& term : terms)
        for (double v : term.r) {
            rmax = std::max(rmax, v);
            rmin = std::min(rmin, v);
        }
    if (!(rmax > 0.0))
        throw std::invalid_argument("level_bracket: all radial values are zero");

    const double tau =
        precomputed_tau ? *precomputed_tau : level_tau(terms, target);
    std::vector<double> scratch;
    double hi = rmax / tau;
    double lo = rmin > 0.0 ? rmin / tau : 0.5 * hi;

    // hi must sit on the far side of the root (level <= target for Phi,
    // >= for Psi); guaranteed analytically, expanded if rounding bites.
    double vhi = level_value(terms, hi, scratch);
    for (int i = 0; vhi != target && (vhi > target) != increasing; ++i) {
        if (i >= kMaxDoublings)
            throw std::runtime_error("solve_level: bracket expansion diverged");
        hi *= 2.0;
        vhi = level_value(terms, hi, scratch);
    }
    double vlo = level_value(terms, lo, scratch);
    for (int i = 0; vlo != target && (vlo < target) != increasing; ++i) {
        if (i >= kMaxDoublings)
            throw std::runtime_error("solve_level: bracket expansion diverged");
        lo *= 0.5;
        vlo = level_value(terms, lo, scratch);
    }
    return SolveBracket{tau, lo, hi};
}

double solve_level_terms(std::span<const LevelTerm> terms, double target,
                         std::optional<double> precomputed_tau) {
    const FnClass cls = terms_class(terms);
    if (!(target > 0.0))
        throw std::invalid_argument("solve_level: target must be > 0");

    double rmax = 0.0;
    double rmin = std::numeric_limits<double>::infinity();
    for (const auto& term : terms)
        for (double v : term.r) {
            if (v < 0.0 || std::isnan(v))
                throw std::domain_error("solve_level: radial values must be >= 0");
            rmax = std::max(rmax, v);
            rmin = std::min(rmin, v);
        }

    if (cls == FnClass::Phi) {
        if (rmax == 0.0) return 0.0; // all radials vanish
        // Identity collapse: a single normalized term with one live entry.
        if (terms.size() == 1 && terms.front().weight == 1.0 && target == 1.0 &&
            terms.front().phi->normalized()) {
            int live = -1;
            bool single = true;
            const auto& r = terms.front().r;
            for (size_t i = 0; i < r.size(); ++i) {
                if (r[i] > 0.0) {
                    if (live >= 0) { single = false; break; }
                    live = static_cast<int>(i);
                }
            }
            if (single && live >= 0) return r[static_cast<size_t>(live)];
        }
    } else if (!(rmin > 0.0)) {
        throw std::domain_error("solve_level: Psi requires strictly positive radials");
    }

    const bool increasing = cls == FnClass::Psi;
    const SolveBracket bracket = level_bracket(terms, target, precomputed_tau);
    std::vector<double> scratch;
    double lo = bracket.lo, hi = bracket.hi;
    if (level_value(terms, hi, scratch) == target) return hi;
    if (level_value(terms, lo, scratch) == target) return lo;

    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double v = level_value(terms, mid, scratch);
        if (v == target) return mid;
        if ((v < target) == increasing)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= kWidthTol * mid &&
            std::abs(v - target) <= kResidualTol * target)
            return mid;
    }
    return mid;
}

double solve_level(const OrliczFunction& phi, std::span<const double> r,
                   double target) {
    LevelTerm term{&phi, 1.0, std::vector<double>(r.begin(), r.end())};
    return solve_level_terms(std::span<const LevelTerm>(&term, 1), target);
}

// ---- Orlicz additions --------------------------------------------------------

namespace {

struct BodyOracle {
    std::function<double(const Direction&)> radial;
};

std::vector<std::function<double(const Direction&)>> radials_of(
    const std::vector<StarBody>& bodies) {
    std::vector<std::function<double(const Direction&)>> r;
    r.reserve(bodies.size());
    for (const auto& b : bodies) r.push_back(b.radial);
    return r;
}

} // namespace

StarBody orlicz_sum(const OrliczFunction& phi, const std::vector<StarBody>& bodies) {
    if (static_cast<int>(bodies.size()) != phi.arity())
        throw std::invalid_argument("orlicz_sum: arity mismatch");
    if (bodies.empty()) throw std::invalid_argument("orlicz_sum: no bodies");
    const int n = bodies.front().dimension;
    for (const auto& b : bodies)
        if (b.dimension != n)
            throw std::invalid_argument("orlicz_sum: dimension mismatch");
    if (phi.fn_class() == FnClass::Psi)
        for (const auto& b : bodies)
            if (!b.positive)
                throw std::invalid_argument("orlicz_sum: Psi requires positive bodies");

    // tau with phi(tau, ..., tau) = 1, shared by every nodewise solve.
    LevelTerm probe{&phi, 1.0, std::vector<double>(static_cast<size_t>(phi.arity()), 0.0)};
    const double tau = level_tau(std::span<const LevelTerm>(&probe, 1), 1.0);

    auto rads = radials_of(bodies);
    const OrliczFunction fn = phi;
    StarBody s;
    s.dimension = n;
    s.radial = [fn, rads, tau](const Direction& u) {
        LevelTerm term{&fn, 1.0, {}};
        term.r.reserve(rads.size());
        for (const auto& r : rads) term.r.push_back(r(u));
        return solve_level_terms(std::span<const LevelTerm>(&term, 1), 1.0, tau);
    };
    bool all_pos = true, all_cont = true;
    double cmax = 0.0, cmin = std::numeric_limits<double>::infinity();
    std::string label = "+~_" + (phi.name().empty() ? "phi" : phi.name()) + "(";
    for (size_t i = 0; i < bodies.size(); ++i) {
        all_pos = all_pos && bodies[i].positive;
        all_cont = all_cont && bodies[i].continuous;
        cmax = std::max(cmax, bodies[i].upper_bound);
        cmin = std::min(cmin, bodies[i].lower_bound);
        label += (i ? "," : "") + bodies[i].label;
    }
    s.positive = all_pos;
    s.continuous = all_cont;
    s.label = label + ")";
    s.upper_bound = cmax / tau;
    s.lower_bound = all_pos ? cmin / tau : 0.0;
    return s;
}

StarBody orlicz_combination_measure(const OrliczFunction& phi,
                                    const DiscreteStarMeasure& mu) {
    mu.validate();
    if (mu.arity() != phi.arity())
        throw std::invalid_argument("orlicz_combination_measure: arity mismatch");
    if (phi.fn_class() == FnClass::Psi) {
        double common_lower = std::numeric_limits<double>::infinity();
        for (const auto& a : mu.atoms)
            for (const auto& b : a.bodies) {
                if (!b.positive)
                    throw std::invalid_argument(
                        "orlicz_combination_measure: Psi requires positive bodies");
                common_lower = std::min(common_lower, b.lower_bound);
            }
        if (!(common_lower > 0.0))
            throw std::invalid_argument(
                "orlicz_combination_measure: Psi requires a positive common lower radial bound");
    }

    std::vector<LevelTerm> probes;
    for (const auto& a : mu.atoms)
        probes.push_back(LevelTerm{
            &phi, a.weight, std::vector<double>(static_cast<size_t>(phi.arity()), 0.0)});
    const double tau = level_tau(probes, 1.0);

    struct AtomOracle {
        double weight;
        std::vector<std::function<double(const Direction&)>> radials;
    };
    std::vector<AtomOracle> atoms;
    for (const auto& a : mu.atoms)
        atoms.push_back(AtomOracle{a.weight, radials_of(a.bodies)});

    const OrliczFunction fn = phi;
    StarBody s;
    s.dimension = mu.dimension();
    s.radial = [fn, atoms, tau](const Direction& u) {
        std::vector<LevelTerm> terms;
        terms.reserve(atoms.size());
        for (const auto& a : atoms) {
            LevelTerm t{&fn, a.weight, {}};
            t.r.reserve(a.radials.size());
            for (const auto& r : a.radials) t.r.push_back(r(u));
            terms.push_back(std::move(t));
        }
        return solve_level_terms(terms, 1.0, tau);
    };
    bool all_pos = true, all_cont = true;
    double cmax = 0.0, cmin = std::numeric_limits<double>::infinity();
    for (const auto& a : mu.atoms)
        for (const auto& b : a.bodies) {
            all_pos = all_pos && b.positive;
            all_cont = all_cont && b.continuous;
            cmax = std::max(cmax, b.upper_bound);
            cmin = std::min(cmin, b.lower_bound);
        }
    s.positive = all_pos;
    s.continuous = all_cont;
    s.label = "orlicz-measure-sum";
    s.upper_bound = cmax / tau;
    s.lower_bound = all_pos ? cmin / tau : 0.0;
    return s;
}

StarBody orlicz_linear_combination(const OrliczFunction& phi1,
                                   const OrliczFunction& phi2,
                                   const StarBody& k, double eps,
                                   const StarBody& l) {
    if (phi1.arity() != 1 || phi2.arity() != 1)
        throw std::invalid_argument("orlicz_linear_combination: unary functions required");
    if (phi1.fn_class() != phi2.fn_class())
        throw std::invalid_argument("orlicz_linear_combination: mixed classes");
    if (k.dimension != l.dimension)
        throw std::invalid_argument("orlicz_linear_combination: dimension mismatch");
    if (!(eps > 0.0))
        throw std::invalid_argument("orlicz_linear_combination: eps must be positive");
    const bool psi = phi1.fn_class() == FnClass::Psi;
    if (psi && (!k.positive || !l.positive))
        throw std::invalid_argument("orlicz_linear_combination: Psi requires positive bodies");

    const std::vector<LevelTerm> probes{LevelTerm{&phi1, 1.0, {0.0}},
                                        LevelTerm{&phi2, eps, {0.0}}};
    const double tau = level_tau(probes, 1.0);

    const OrliczFunction f1 = phi1, f2 = phi2;
    auto rk = k.radial;
    auto rl = l.radial;
    StarBody s;
    s.dimension = k.dimension;
    s.radial = [f1, f2, rk, rl, eps, tau](const Direction& u) {
        const std::vector<LevelTerm> terms{LevelTerm{&f1, 1.0, {rk(u)}},
                                           LevelTerm{&f2, eps, {rl(u)}}};
        return solve_level_terms(terms, 1.0, tau);
    };
    s.positive = k.positive && l.positive;
    s.continuous = k.continuous && l.continuous;
    s.label = k.label + " +~eps " + l.label;
    s.upper_bound = std::max(k.upper_bound, l.upper_bound) / tau;
    s.lower_bound = s.positive ? std::min(k.lower_bound, l.lower_bound) / tau : 0.0;
    return s;
}

StarBody log_combination(const StarBody& k, const StarBody& l, double t) {
    if (k.dimension != l.dimension)
        throw std::invalid_argument("log_combination: dimension mismatch");
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("log_combination: t must lie in (0,1)");
    if (!k.positive || !l.positive)
        throw std::invalid_argument("log_combination: positive bodies required");
    auto rk = k.radial;
    auto rl = l.radial;
    StarBody s;
    s.dimension = k.dimension;
    s.radial = [rk, rl, t](const Direction& u) {
        return std::pow(rk(u), 1.0 - t) * std::pow(rl(u), t);
    };
    s.positive = true;
    s.continuous = k.continuous && l.continuous;
    s.label = "log(" + k.label + "," + l.label + ";" + std::to_string(t) + ")";
    s.upper_bound = std::pow(k.upper_bound, 1.0 - t) * std::pow(l.upper_bound, t);
    s.lower_bound = std::pow(k.lower_bound, 1.0 - t) * std::pow(l.lower_bound, t);
    return s;
}

AssociativityReport check_associativity(const OrliczFunction& phi,
                                        const StarBody& k, const StarBody& l,
                                        const StarBody& m_body,
                                        const SphericalRule& probe) {
    if (phi.arity() != 2)
        throw std::invalid_argument("check_associativity: binary phi required");
    const StarBody left = orlicz_sum(phi, {orlicz_sum(phi, {k, l}), m_body});
    const StarBody right = orlicz_sum(phi, {k, orlicz_sum(phi, {l, m_body})});
    double gap = -1.0;
    const Direction* arg = nullptr;
    for (const Direction& u : probe.nodes()) {
        const double g = std::abs(left.rho(u) - right.rho(u));
        if (g > gap) {
            gap = g;
            arg = &u;
        }
    }
    return AssociativityReport{gap, *arg};
}

// ---- registry ----------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Curvature power_phi0_curvature(double p, int n) {
    // Curvature of t -> t^{p/n}; a separable sum inherits it componentwise.
    if (p < 0.0) return Curvature::StrictlyConvex;
    if (std::abs(p - n) <= 1e-12) return Curvature::Concave; // linear
    return p < n ? Curvature::StrictlyConcave : Curvature::StrictlyConvex;
}

Curvature join_curvature(Curvature a, Curvature b) {
    auto concaveish = [](Curvature c) {
        return c == Curvature::Concave || c == Curvature::StrictlyConcave;
    };
    auto convexish = [](Curvature c) {
        return c == Curvature::Convex || c == Curvature::StrictlyConvex;
    };
    if (concaveish(a) && concaveish(b))
        return (a == Curvature::StrictlyConcave || b == Curvature::StrictlyConcave)
                   ? Curvature::StrictlyConcave
                   : Curvature::Concave;
    if (convexish(a) && convexish(b))
        return (a == Curvature::StrictlyConvex || b == Curvature::StrictlyConvex)
                   ? Curvature::StrictlyConvex
                   : Curvature::Convex;
    return Curvature::None;
}

OrliczFunction make_power_sum(double p, int arity, int n, std::string name) {
    if (p == 0.0) throw std::invalid_argument("registry: p must be nonzero");
    OrliczFunction::Options opt;
    opt.name = std::move(name);
    opt.convex = p >= 1.0 || p < 0.0;
    opt.phi0_curvature = power_phi0_curvature(p, n);
    if (arity == 1) {
        opt.left_deriv_at_1 = p;
        opt.right_deriv_at_1 = p;
    }
    const FnClass cls = p > 0.0 ? FnClass::Phi : FnClass::Psi;
    return OrliczFunction(
        arity, cls,
        [p](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += std::pow(v, p);
            return s;
        },
        std::move(opt));
}

} // namespace

OrliczFunction make_registry_function(const std::string& descriptor, int arity,
                                      int n) {
    if (arity < 1) throw std::invalid_argument("registry: arity must be >= 1");
    const auto head = descriptor.find(':');
    const std::string name = descriptor.substr(0, head);
    const std::string args =
        head == std::string::npos ? "" : descriptor.substr(head + 1);

    if (name == "lp") {
        const double p = std::stod(args);
        if (!(p > 0.0)) throw std::invalid_argument("registry: lp requires p > 0");
        return make_power_sum(p, arity, n, descriptor);
    }
    if (name == "psi-lp") {
        const double p = std::stod(args);
        if (!(p < 0.0)) throw std::invalid_argument("registry: psi-lp requires p < 0");
        return make_power_sum(p, arity, n, descriptor);
    }
    if (name == "sum-powers") {
        const auto parts = split(args, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("registry: sum-powers:p1,p2");
        if (arity != 2)
            throw std::invalid_argument("registry: sum-powers is binary");
        const double p1 = std::stod(parts[0]);
        const double p2 = std::stod(parts[1]);
        if (!((p1 > 0.0 && p2 > 0.0) || (p1 < 0.0 && p2 < 0.0)))
            throw std::invalid_argument("registry: sum-powers needs both p > 0 or both < 0");
        OrliczFunction::Options opt;
        opt.name = descriptor;
        opt.convex = (p1 >= 1.0 && p2 >= 1.0) || (p1 < 0.0 && p2 < 0.0);
        opt.phi0_curvature =
            join_curvature(power_phi0_curvature(p1, n), power_phi0_curvature(p2, n));
        const FnClass cls = p1 > 0.0 ? FnClass::Phi : FnClass::Psi;
        return OrliczFunction(
            2, cls,
            [p1, p2](std::span<const double> x) {
                return std::pow(x[0], p1) + std::pow(x[1], p2);
            },
            std::move(opt));
    }
    if (name == "poly") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw std::invalid_argument("registry: poly:c1,c2");
        const double c1 = std::stod(parts[0]);
        const double c2 = std::stod(parts[1]);
        if (c1 < 0.0 || c2 < 0.0 || !(c1 + c2 > 0.0))
            throw std::invalid_argument("registry: poly needs c1, c2 >= 0, c1 + c2 > 0");
        const double denom = c1 + c2;
        OrliczFunction::Options opt;
        opt.name = descriptor;
        opt.convex = true;
        // phi0 components are t^{1/n} and t^{2/n}, n >= 2.
        if (c1 > 0.0)
            opt.phi0_curvature = Curvature::StrictlyConcave;
        else
            opt.phi0_curvature = n == 2 ? Curvature::Concave : Curvature::StrictlyConcave;
        if (arity == 1) {
            opt.left_deriv_at_1 = (c1 + 2.0 * c2) / denom;
            opt.right_deriv_at_1 = (c1 + 2.0 * c2) / denom;
        }
        return OrliczFunction(
            arity, FnClass::Phi,
            [c1, c2, denom](std::span<const double> x) {
                double s = 0.0;
                for (double v : x) s += (c1 * v + c2 * v * v) / denom;
                return s;
            },
            std::move(opt));
    }
    if (name == "log-t")
        throw std::invalid_argument(
            "registry: log-t is the radial log combination, not an Orlicz function; "
            "use log_combination");
    throw std::invalid_argument("registry: unknown descriptor '" + descriptor + "'");
}

bool is_log_descriptor(const std::string& descriptor, double* t_out) {
    if (descriptor.rfind("log-t:", 0) != 0) return false;
    const double t = std::stod(descriptor.substr(6));
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("log-t: t must lie in (0,1)");
    if (t_out) *t_out = t;
    return true;
}

} // namespace ostar
