#include "ostar/madd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ostar {

void MSet::validate() const {
    if (arity < 1) throw std::invalid_argument("MSet: arity must be >= 1");
    if (points.empty()) throw std::invalid_argument("MSet: empty point list");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != arity)
            throw std::invalid_argument("MSet: ragged point list");
        for (double v : p)
            if (v < 0.0 || !std::isfinite(v))
                throw std::invalid_argument("MSet: coordinates must be finite and >= 0");
    }
}

MSet make_lp_curve_mset(double p, int samples) {
    if (!(p > 1.0))
        throw std::invalid_argument("make_lp_curve_mset: p must exceed 1");
    if (samples < 2)
        throw std::invalid_argument("make_lp_curve_mset: need at least 2 samples");
    const double pprime = p / (p - 1.0);
    MSet m;
    m.arity = 2;
    m.points.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        m.points.push_back(
            {std::pow(1.0 - t, 1.0 / pprime), std::pow(t, 1.0 / pprime)});
    }
    return m;
}

double support_conv(const MSet& m, std::span<const double> z) {
    if (static_cast<int>(z.size()) != m.arity)
        throw std::invalid_argument("support_conv: dimension mismatch");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : m.points) {
        double dot = 0.0;
        for (size_t i = 0; i < p.size(); ++i) dot += p[i] * z[i];
        best = std::max(best, dot);
    }
    return best;
}

StarBody radial_m_sum(const MSet& m, const std::vector<StarBody>& bodies) {
    m.validate();
    if (static_cast<int>(bodies.size()) != m.arity)
        throw std::invalid_argument("radial_m_sum: arity mismatch");
    const int n = bodies.front().dimension;
    for (const auto& b : bodies)
        if (b.dimension != n)
            throw std::invalid_argument("radial_m_sum: dimension mismatch");

    std::vector<std::function<double(const Direction&)>> rads;
    rads.reserve(bodies.size());
    for (const auto& b : bodies) rads.push_back(b.radial);
    const MSet ms = m;
    StarBody s;
    s.dimension = n;
    s.radial = [ms, rads](const Direction& u) {
        std::vector<double> z;
        z.reserve(rads.size());
        for (const auto& r : rads) z.push_back(r(u));
        return support_conv(ms, z);
    };
    bool all_cont = true;
    std::vector<double> ub, lb;
    for (const auto& b : bodies) {
        all_cont = all_cont && b.continuous;
        ub.push_back(b.upper_bound);
        lb.push_back(b.lower_bound);
    }
    s.continuous = all_cont;
    s.upper_bound = support_conv(ms, ub);
    s.lower_bound = support_conv(ms, lb);
    s.positive = s.lower_bound > 0.0;
    s.label = "m-sum";
    return s;
}

namespace {

/// Point of the level curve {phi = 1, x >= 0} along the direction at angle
/// beta, as a scaling of (cos beta, sin beta). Uses solve_level: if lambda
/// solves phi(c/lambda) = 1 for c = (cos beta, sin beta), the curve point
/// is c / lambda.
std::pair<double, double> level_curve_point(const OrliczFunction& phi,
                                            double beta) {
    const double c = std::cos(beta), s = std::sin(beta);
    const std::vector<double> ray{c, s};
    const double lambda = solve_level(phi, ray);
    return {c / lambda, s / lambda};
}

/// h_{J_phi}(d): maximize x . d over the level curve, parameterized by
/// angle in [0, pi/2]. Coarse scan then golden-section refinement.
double support_of_level_body(const OrliczFunction& phi, double dx, double dy) {
    auto objective = [&](double beta) {
        const auto [x, y] = level_curve_point(phi, beta);
        return x * dx + y * dy;
    };
    const int scan = 48;
    double best_beta = 0.0, best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= scan; ++i) {
        const double beta = 0.5 * M_PI * i / scan;
        const double v = objective(beta);
        if (v > best) {
            best = v;
            best_beta = beta;
        }
    }
    double a = std::max(0.0, best_beta - 0.5 * M_PI / scan);
    double b = std::min(0.5 * M_PI, best_beta + 0.5 * M_PI / scan);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = objective(c1), f2 = objective(c2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = objective(c2);
        } else {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = objective(c1);
        }
    }
    return std::max({best, f1, f2});
}

} // namespace

MSet m_set_from_phi(const OrliczFunction& phi, int resolution) {
    if (phi.arity() != 2)
        throw std::invalid_argument("m_set_from_phi: binary phi required");
    if (phi.fn_class() != FnClass::Phi)
        throw std::invalid_argument("m_set_from_phi: Phi-class function required");
    if (!phi.convex_flag().value_or(false))
        throw std::invalid_argument(
            "m_set_from_phi: phi must be flagged convex; for non-convex phi "
            "run check_sublinearity_counterexample instead");
    if (resolution < 2)
        throw std::invalid_argument("m_set_from_phi: resolution must be >= 2");

    MSet m;
    m.arity = 2;
    m.points.reserve(static_cast<size_t>(resolution) + 1);
    auto emit = [&](double alpha) {
        const double dx = std::cos(alpha), dy = std::sin(alpha);
        const double h = support_of_level_body(phi, dx, dy);
        // Boundary point of the polar body along d: d / h_{J_phi}(d).
        m.points.push_back({dx / h, dy / h});
    };
    for (int i = 0; i < resolution; ++i)
        emit(0.5 * M_PI * i / (resolution - 1));
    // An even grid count misses the diagonal; the polar body of a linear
    // phi has its corner exactly there, and the support max loses
    // first-order accuracy without it.
    if (resolution % 2 == 0) emit(0.25 * M_PI);
    return m;
}

SublinearityReport check_sublinearity_counterexample(const OrliczFunction& phi) {
    if (phi.arity() != 2)
        throw std::invalid_argument(
            "check_sublinearity_counterexample: binary phi required");
    if (phi.fn_class() != FnClass::Phi)
        throw std::invalid_argument(
            "check_sublinearity_counterexample: Phi-class function required");

    auto g = [&](double s, double t) {
        if (s == 0.0 && t == 0.0) return 0.0;
        const std::vector<double> r{s, t};
        return solve_level(phi, r);
    };

    std::vector<double> grid;
    for (double v = 0.0; v <= 2.0 + 1e-12; v += 0.25) grid.push_back(v);

    SublinearityReport best;
    for (double a1 : grid)
        for (double b1 : grid) {
            const double g1 = g(a1, b1);
            for (double a2 : grid)
                for (double b2 : grid) {
                    const double g2 = g(a2, b2);
                    const double gap = g(a1 + a2, b1 + b2) - g1 - g2;
                    if (gap > best.gap) {
                        best.gap = gap;
                        best.witness = std::make_pair(std::vector<double>{a1, b1},
                                                      std::vector<double>{a2, b2});
                    }
                }
        }
    if (best.gap <= 1e-9) best.witness.reset();
    return best;
}

} // namespace ostar
