#include "ostar/quadrature.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gsl/gsl_integration.h>

#include "ostar/detail/numeric.hpp"

namespace ostar {

std::string to_string(RuleKind k) {
    switch (k) {
        case RuleKind::Trapezoid2d: return "trapezoid2d";
        case RuleKind::Product3d: return "product3d";
        case RuleKind::MonteCarlo: return "montecarlo";
    }
    throw std::logic_error("unreachable");
}

SphericalRule::SphericalRule(int dimension, RuleKind kind, int resolution,
                             std::optional<std::uint64_t> seed,
                             std::vector<Direction> nodes,
                             std::vector<double> weights)
    : dimension_(dimension),
      kind_(kind),
      resolution_(resolution),
      seed_(seed),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)) {
    if (nodes_.size() != weights_.size())
        throw std::invalid_argument("SphericalRule: node/weight size mismatch");
}

std::string SphericalRule::descriptor() const {
    std::ostringstream os;
    os << dimension_ << ":" << to_string(kind_) << ":" << resolution_;
    if (seed_) os << ":" << *seed_;
    return os.str();
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    gsl_integration_glfixed_table* t =
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
    if (t == nullptr) throw std::runtime_error("gauss_legendre: allocation failed");
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = 0.0, w = 0.0;
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &x, &w, t);
        nodes[static_cast<size_t>(i)] = x;
        weights[static_cast<size_t>(i)] = w;
    }
    gsl_integration_glfixed_table_free(t);
}

SphericalRule build_rule(int n, int resolution,
                         std::optional<std::uint64_t> seed) {
    if (n < 2) throw std::invalid_argument("build_rule: n must be at least 2");
    if (resolution < 4)
        throw std::invalid_argument("build_rule: resolution must be at least 4");

    std::vector<Direction> nodes;
    std::vector<double> weights;

    if (n == 2) {
        nodes.reserve(static_cast<size_t>(resolution));
        weights.assign(static_cast<size_t>(resolution), 2.0 * M_PI / resolution);
        for (int i = 0; i < resolution; ++i)
            nodes.push_back(Direction::angle_2d(2.0 * M_PI * i / resolution));
        return SphericalRule(2, RuleKind::Trapezoid2d, resolution, std::nullopt,
                             std::move(nodes), std::move(weights));
    }

    if (n == 3) {
        std::vector<double> gx, gw;
        gauss_legendre(resolution, gx, gw);
        const int naz = 2 * resolution;
        const double waz = 2.0 * M_PI / naz;
        nodes.reserve(static_cast<size_t>(resolution) * naz);
        weights.reserve(static_cast<size_t>(resolution) * naz);
        for (int i = 0; i < resolution; ++i) {
            const double c = gx[static_cast<size_t>(i)];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < naz; ++j) {
                const double az = 2.0 * M_PI * j / naz;
                nodes.push_back(Direction::from_vector(std::vector<double>{
                    s * std::cos(az), s * std::sin(az), c}));
                weights.push_back(gw[static_cast<size_t>(i)] * waz);
            }
        }
        return SphericalRule(3, RuleKind::Product3d, resolution, std::nullopt,
                             std::move(nodes), std::move(weights));
    }

    if (!seed)
        throw std::invalid_argument(
            "build_rule: n >= 4 requires a seed (reproducibility contract)");
    std::mt19937_64 rng(*seed);
    const double w = detail::sphere_surface_area(n) / resolution;
    nodes.reserve(static_cast<size_t>(resolution));
    weights.assign(static_cast<size_t>(resolution), w);
    for (int i = 0; i < resolution; ++i) {
        std::vector<double> v(static_cast<size_t>(n));
        double nv = 0.0;
        do {
            for (double& x : v) x = detail::gaussian(rng);
            nv = 0.0;
            for (double x : v) nv += x * x;
        } while (!(nv > 1e-24));
        nodes.push_back(Direction::from_vector(std::move(v)));
    }
    return SphericalRule(n, RuleKind::MonteCarlo, resolution, seed,
                         std::move(nodes), std::move(weights));
}

SphericalRule parse_rule(const std::string& descriptor) {
    std::vector<std::string> parts;
    std::stringstream ss(descriptor);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("parse_rule: expected n:kind:resolution[:seed]");
    const int n = std::stoi(parts[0]);
    const std::string& kind = parts[1];
    const int resolution = std::stoi(parts[2]);
    std::optional<std::uint64_t> seed;
    if (parts.size() == 4) seed = std::stoull(parts[3]);
    SphericalRule rule = build_rule(n, resolution, seed);
    if (to_string(rule.kind()) != kind)
        throw std::invalid_argument("parse_rule: kind '" + kind +
                                    "' does not match dimension " + parts[0]);
    return rule;
}

} // namespace ostar
