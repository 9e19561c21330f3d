#ifndef OSTAR_QUADRATURE_HPP
#define OSTAR_QUADRATURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostar/geometry.hpp"

namespace ostar {

enum class RuleKind { Trapezoid2d, Product3d, MonteCarlo };

std::string to_string(RuleKind k);

/// Quadrature nodes and weights on S^{n-1}. Weights carry surface measure:
/// their sum is the area of the sphere (exactly by construction for Monte
/// Carlo, to rounding otherwise).
class SphericalRule {
public:
    SphericalRule(int dimension, RuleKind kind, int resolution,
                  std::optional<std::uint64_t> seed,
                  std::vector<Direction> nodes, std::vector<double> weights);

    int dimension() const { return dimension_; }
    RuleKind kind() const { return kind_; }
    int resolution() const { return resolution_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    const std::vector<Direction>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    size_t size() const { return nodes_.size(); }

    /// "n:kind:resolution[:seed]"
    std::string descriptor() const;

private:
    int dimension_;
    RuleKind kind_;
    int resolution_;
    std::optional<std::uint64_t> seed_;
    std::vector<Direction> nodes_;
    std::vector<double> weights_;
};

/// n = 2: trapezoid on uniform angles (resolution nodes).
/// n = 3: Gauss-Legendre in the polar cosine (resolution nodes) times a
///        uniform azimuth grid (2 * resolution nodes).
/// n >= 4: seeded uniform sphere sampling with equal weights; the seed is
///         required so runs are reproducible.
SphericalRule build_rule(int n, int resolution,
                         std::optional<std::uint64_t> seed = std::nullopt);

/// Parses "n:kind:resolution[:seed]".
SphericalRule parse_rule(const std::string& descriptor);

/// Gauss-Legendre nodes (ascending) and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

} // namespace ostar

#endif // OSTAR_QUADRATURE_HPP
