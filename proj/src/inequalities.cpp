#include "ostar/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ostar/detail/numeric.hpp"

namespace ostar {

namespace {

bool concaveish(Curvature c) {
    return c == Curvature::Concave || c == Curvature::StrictlyConcave;
}
bool strict(Curvature c) {
    return c == Curvature::StrictlyConcave || c == Curvature::StrictlyConvex;
}

double signed_slack(double lhs, double rhs, IneqDirection d) {
    return d == IneqDirection::GE ? lhs - rhs : rhs - lhs;
}

SphericalRule half_rule(const SphericalRule& rule, bool second) {
    const size_t half = rule.size() / 2;
    const size_t lo = second ? half : 0;
    const size_t hi = second ? rule.size() : half;
    std::vector<Direction> nodes(rule.nodes().begin() + lo,
                                 rule.nodes().begin() + hi);
    std::vector<double> weights(rule.weights().begin() + lo,
                                rule.weights().begin() + hi);
    const double scale = static_cast<double>(rule.size()) / (hi - lo);
    for (double& w : weights) w *= scale;
    return SphericalRule(rule.dimension(), rule.kind(),
                         static_cast<int>(hi - lo), rule.seed(),
                         std::move(nodes), std::move(weights));
}

/// 1e-9 for deterministic rules; Monte Carlo rules add 4x a split-half
/// error estimate of the slack.
double slack_tolerance(const SphericalRule& rule,
                       const std::function<double(const SphericalRule&)>& slack_of) {
    if (rule.kind() != RuleKind::MonteCarlo || rule.size() < 8) return kSlackTol;
    const double s1 = slack_of(half_rule(rule, false));
    const double s2 = slack_of(half_rule(rule, true));
    return kSlackTol + 2.0 * std::abs(s1 - s2);
}

IneqReport finish(std::string name, double lhs, double rhs, IneqDirection dir,
                  double tol, std::string hypothesis, std::string rule) {
    IneqReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.direction = dir;
    r.slack = signed_slack(lhs, rhs, dir);
    r.tol = tol;
    r.eq_tol = kEqualityTol;
    r.satisfied = r.slack >= -tol;
    r.equality = std::abs(r.slack) <= kEqualityTol;
    r.hypothesis = std::move(hypothesis);
    r.rule = std::move(rule);
    return r;
}

std::vector<double> curvature_grid() { return {0.3, 0.7, 1.0, 1.8, 3.5}; }

bool midpoint_consistent(const std::function<double(std::span<const double>)>& phi0,
                         int m, Curvature declared) {
    if (declared == Curvature::None) return true;
    const bool want_concave = concaveish(declared);
    const auto g = curvature_grid();
    std::vector<std::vector<double>> pts;
    if (m == 1) {
        for (double v : g) pts.push_back({v});
    } else {
        for (double a : g)
            for (double b : g) pts.push_back({a, b});
    }
    std::vector<double> mid(static_cast<size_t>(m));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            for (int c = 0; c < m; ++c)
                mid[static_cast<size_t>(c)] =
                    0.5 * (pts[i][static_cast<size_t>(c)] + pts[j][static_cast<size_t>(c)]);
            const double fm = phi0(mid);
            const double avg = 0.5 * (phi0(pts[i]) + phi0(pts[j]));
            const double tol = 1e-9 * std::max({1.0, std::abs(fm), std::abs(avg)});
            if (want_concave ? fm < avg - tol : fm > avg + tol) return false;
        }
    return true;
}

} // namespace

bool curvature_spot_check(const std::function<double(double)>& f, int n,
                          Curvature declared) {
    auto phi0 = [&](std::span<const double> x) {
        return f(std::pow(x[0], 1.0 / n));
    };
    return midpoint_consistent(phi0, 1, declared);
}

namespace {

bool curvature_spot_check_multi(const OrliczFunction& phi, int n,
                                Curvature declared) {
    auto phi0 = [&](std::span<const double> x) {
        std::vector<double> y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = std::pow(x[i], 1.0 / n);
        return phi(y);
    };
    return midpoint_consistent(phi0, phi.arity(), declared);
}

std::string hypothesis_string(Curvature c, bool spot_ok) {
    std::string h = "phi0=" + to_string(c);
    if (!spot_ok) h += " (spot check violated)";
    return h;
}

} // namespace

IneqReport check_dual_orlicz_bm(const OrliczFunction& phi,
                                const std::vector<StarBody>& bodies,
                                const SphericalRule& rule) {
    if (static_cast<int>(bodies.size()) != phi.arity())
        throw std::invalid_argument("check_dual_orlicz_bm: arity mismatch");
    const auto curvature = phi.phi0_curvature();
    if (!curvature || *curvature == Curvature::None)
        throw std::invalid_argument(
            "check_dual_orlicz_bm: phi0 curvature hypothesis missing; "
            "inequality direction undefined");
    if (phi.fn_class() == FnClass::Psi)
        for (const auto& b : bodies)
            if (!b.positive)
                throw std::invalid_argument(
                    "check_dual_orlicz_bm: Psi requires positive bodies");

    const int n = bodies.front().dimension;
    const StarBody s = orlicz_sum(phi, bodies);

    auto sides = [&](const SphericalRule& r) {
        const double vs = volume(s, r);
        if (!(vs > 0.0))
            throw std::invalid_argument(
                "check_dual_orlicz_bm: sum has zero volume (need some V(K_j) > 0)");
        std::vector<double> args;
        args.reserve(bodies.size());
        for (const auto& b : bodies)
            args.push_back(std::pow(volume(b, r) / vs, 1.0 / n));
        return std::make_pair(phi(args), 1.0);
    };
    const IneqDirection dir =
        concaveish(*curvature) ? IneqDirection::GE : IneqDirection::LE;
    const auto [lhs, rhs] = sides(rule);
    const double tol = slack_tolerance(rule, [&](const SphericalRule& r) {
        const auto [a, b] = sides(r);
        return signed_slack(a, b, dir);
    });
    const bool spot_ok = curvature_spot_check_multi(phi, n, *curvature);
    IneqReport rep = finish("dual-orlicz-bm", lhs, rhs, dir, tol,
                            hypothesis_string(*curvature, spot_ok),
                            rule.descriptor());
    if (!strict(*curvature)) rep.hypothesis += " (non-strict)";
    return rep;
}

IneqReport check_dual_log_bm(const StarBody& k, const StarBody& l, double t,
                             const SphericalRule& rule) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("check_dual_log_bm: t must lie in (0,1)");
    const StarBody s = log_combination(k, l, t);
    auto sides = [&](const SphericalRule& r) {
        return std::make_pair(volume(s, r),
                              std::pow(volume(k, r), 1.0 - t) *
                                  std::pow(volume(l, r), t));
    };
    const auto [lhs, rhs] = sides(rule);
    const double tol = slack_tolerance(rule, [&](const SphericalRule& r) {
        const auto [a, b] = sides(r);
        return signed_slack(a, b, IneqDirection::LE);
    });
    return finish("dual-log-bm", lhs, rhs, IneqDirection::LE, tol,
                  "t=" + std::to_string(t), rule.descriptor());
}

IneqReport check_dual_orlicz_minkowski(const MixedIntegrand& phi,
                                       const StarBody& k, const StarBody& l,
                                       const SphericalRule& rule) {
    if (!phi.phi0_curvature || *phi.phi0_curvature == Curvature::None)
        throw std::invalid_argument(
            "check_dual_orlicz_minkowski: phi0 curvature hypothesis missing");
    if (!k.positive || !l.positive || !k.continuous || !l.continuous)
        throw std::invalid_argument(
            "check_dual_orlicz_minkowski: positive continuous bodies required");
    const int n = k.dimension;
    auto sides = [&](const SphericalRule& r) {
        const double lhs = dual_orlicz_mixed_volume(phi, k, l, r).value;
        const double vk = volume(k, r);
        const double vl = volume(l, r);
        return std::make_pair(lhs, vk * phi.f(std::pow(vl / vk, 1.0 / n)));
    };
    const IneqDirection dir =
        concaveish(*phi.phi0_curvature) ? IneqDirection::LE : IneqDirection::GE;
    const auto [lhs, rhs] = sides(rule);
    const double tol = slack_tolerance(rule, [&](const SphericalRule& r) {
        const auto [a, b] = sides(r);
        return signed_slack(a, b, dir);
    });
    const bool spot_ok = curvature_spot_check(phi.f, n, *phi.phi0_curvature);
    IneqReport rep = finish("dual-orlicz-minkowski", lhs, rhs, dir, tol,
                            hypothesis_string(*phi.phi0_curvature, spot_ok),
                            rule.descriptor());
    if (!strict(*phi.phi0_curvature)) rep.hypothesis += " (non-strict)";
    return rep;
}

IneqReport check_dual_log_minkowski(const StarBody& k, const StarBody& l,
                                    const SphericalRule& rule) {
    if (!k.positive || !l.positive)
        throw std::invalid_argument(
            "check_dual_log_minkowski: positive bodies required");
    const int n = k.dimension;
    auto rk = k.radial;
    auto rl = l.radial;
    auto sides = [&](const SphericalRule& r) {
        const double lhs = dual_cone_integral(
            k, [&](const Direction& u) { return std::log(rl(u) / rk(u)); }, r);
        const double rhs = std::log(volume(l, r) / volume(k, r)) / n;
        return std::make_pair(lhs, rhs);
    };
    const auto [lhs, rhs] = sides(rule);
    const double tol = slack_tolerance(rule, [&](const SphericalRule& r) {
        const auto [a, b] = sides(r);
        return signed_slack(a, b, IneqDirection::LE);
    });
    return finish("dual-log-minkowski", lhs, rhs, IneqDirection::LE, tol, "",
                  rule.descriptor());
}

IneqReport check_polar_log(const ConvexBodySupport& ksupp,
                           const ConvexBodySupport& lsupp,
                           const SphericalRule& rule) {
    const StarBody kp = polar_star_body(ksupp);
    const StarBody lp = polar_star_body(lsupp);
    const int n = kp.dimension;
    auto hk = ksupp.support;
    auto hl = lsupp.support;
    auto sides = [&](const SphericalRule& r) {
        const double lhs = dual_cone_integral(
            kp, [&](const Direction& u) { return std::log(hl(u) / hk(u)); }, r);
        const double rhs = std::log(volume(kp, r) / volume(lp, r)) / n;
        return std::make_pair(lhs, rhs);
    };
    const auto [lhs, rhs] = sides(rule);
    const double tol = slack_tolerance(rule, [&](const SphericalRule& r) {
        const auto [a, b] = sides(r);
        return signed_slack(a, b, IneqDirection::GE);
    });
    return finish("polar-log", lhs, rhs, IneqDirection::GE, tol, "",
                  rule.descriptor());
}

VariationReport first_variation_volume(const OrliczFunction& phi1,
                                       const OrliczFunction& phi2,
                                       const StarBody& k, const StarBody& l,
                                       const SphericalRule& rule,
                                       std::vector<double> eps_list) {
    if (phi1.arity() != 1 || phi2.arity() != 1)
        throw std::invalid_argument("first_variation_volume: unary functions required");
    if (phi1.fn_class() != phi2.fn_class())
        throw std::invalid_argument("first_variation_volume: mixed classes");
    const bool psi = phi1.fn_class() == FnClass::Psi;
    if (!k.positive)
        throw std::invalid_argument(
            "first_variation_volume: K must contain a centered ball");
    if (psi && !l.positive)
        throw std::invalid_argument(
            "first_variation_volume: Psi requires positive L");

    VariationReport rep;
    const double d1 = phi1.deriv_at_1(/*left=*/!psi, &rep.deriv_estimated);
    if (!psi && !(d1 > 0.0))
        throw std::invalid_argument(
            "first_variation_volume: left derivative of phi1 at 1 must be positive");
    if (psi && d1 == 0.0)
        throw std::invalid_argument(
            "first_variation_volume: right derivative of phi1 at 1 must be nonzero");

    if (eps_list.empty())
        for (double e = 1e-2; e > 1e-6 / 2.0; e *= 0.5) eps_list.push_back(e);
    std::sort(eps_list.begin(), eps_list.end(), std::greater<double>());
    rep.eps_schedule = eps_list;

    const double v0 = volume(k, rule);
    std::vector<double> quotients; // difference quotients, largest eps first
    for (double e : eps_list) {
        const StarBody s = orlicz_linear_combination(phi1, phi2, k, e, l);
        quotients.push_back((volume(s, rule) - v0) / e);
    }
    const size_t m = quotients.size();
    rep.raw_slope = quotients.back();
    if (m >= 2 && std::abs(eps_list[m - 2] - 2.0 * eps_list[m - 1]) <
                      1e-12 * eps_list[m - 2]) {
        // One-sided first-order Richardson on the 2:1 tail pair.
        rep.numeric_derivative = 2.0 * quotients[m - 1] - quotients[m - 2];
        rep.extrapolated = true;
    } else {
        rep.numeric_derivative = rep.raw_slope;
        rep.extrapolated = false;
    }

    const MixedIntegrand f2 = make_mixed_integrand(phi2, k.dimension);
    const double mixed = dual_orlicz_mixed_volume(f2, k, l, rule).value;
    rep.analytic_value = k.dimension * mixed / d1;
    rep.relative_error =
        std::abs(rep.numeric_derivative - rep.analytic_value) /
        std::max(std::abs(rep.analytic_value),
                 std::numeric_limits<double>::epsilon());
    return rep;
}

DilatateReport dilatate_test(const StarBody& k, const StarBody& l,
                             const SphericalRule& probe) {
    DilatateReport rep;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
    for (const Direction& u : probe.nodes()) {
        const double a = k.rho(u);
        const double b = l.rho(u);
        if (!(a > 0.0) || !(b > 0.0)) {
            rep.is_dilatate = false;
            rep.note = "zero radial at a probe node";
            return rep;
        }
        const double ratio = b / a;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        sum += ratio;
    }
    rep.ratio = sum / static_cast<double>(probe.size());
    rep.is_dilatate = (hi - lo) <= 1e-8 * hi;
    return rep;
}

// ---- sweeps ------------------------------------------------------------------

SweepSummary sweep_check(const std::string& check, int n, int count,
                         std::uint64_t base_seed, const SphericalRule& rule,
                         const std::string& phi_descriptor, double t) {
    SweepSummary out;
    out.name = check;
    out.min_slack = std::numeric_limits<double>::infinity();

    for (int i = 0; i < count; ++i) {
        const std::uint64_t seed = base_seed + 1000ull * static_cast<std::uint64_t>(i);
        const bool dilatate_pair = (i % 10) == 9; // keep equality cases in the mix
        IneqReport rep;
        if (check == "polar-log") {
            std::mt19937_64 rng(seed);
            std::vector<double> ax1(static_cast<size_t>(n)), ax2(static_cast<size_t>(n));
            for (double& v : ax1) v = detail::uniform(rng, 0.5, 2.5);
            if (dilatate_pair) {
                const double c = detail::uniform(rng, 0.5, 2.0);
                for (size_t j = 0; j < ax1.size(); ++j) ax2[j] = c * ax1[j];
            } else {
                for (double& v : ax2) v = detail::uniform(rng, 0.5, 2.5);
            }
            rep = check_polar_log(make_ellipsoid_support(ax1),
                                  make_ellipsoid_support(ax2), rule);
        } else {
            const StarBody k = make_random_smooth_star(n, seed);
            StarBody l;
            if (dilatate_pair) {
                std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
                l = scale_body(k, detail::uniform(rng, 0.5, 2.0));
            } else {
                l = make_random_smooth_star(n, seed + 1);
            }
            if (check == "dual-orlicz-bm") {
                rep = check_dual_orlicz_bm(
                    make_registry_function(phi_descriptor, 2, n), {k, l}, rule);
            } else if (check == "dual-log-bm") {
                rep = check_dual_log_bm(k, l, t, rule);
            } else if (check == "dual-orlicz-minkowski") {
                rep = check_dual_orlicz_minkowski(
                    make_mixed_integrand(phi_descriptor, n), k, l, rule);
            } else if (check == "dual-log-minkowski") {
                rep = check_dual_log_minkowski(k, l, rule);
            } else {
                throw std::invalid_argument("sweep_check: unknown check '" + check + "'");
            }
        }
        out.seeds.push_back(seed);
        out.min_slack = std::min(out.min_slack, rep.slack);
        if (!rep.satisfied) ++out.violations;
        if (rep.equality) ++out.equality_cases;
        out.reports.push_back(std::move(rep));
    }
    return out;
}

} // namespace ostar
