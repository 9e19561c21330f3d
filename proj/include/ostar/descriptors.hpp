#ifndef OSTAR_DESCRIPTORS_HPP
#define OSTAR_DESCRIPTORS_HPP

#include <string>

#include "ostar/geometry.hpp"
#include "ostar/madd.hpp"

namespace ostar {

/// Body descriptors: "ball:n:r", "fourier:base:k:a[:k:a...]" (n = 2),
/// "ellipsoid:d1,...,dn" (diagonal image of the unit ball), "grid:path".
StarBody parse_body(const std::string& descriptor);

/// Ellipsoid support oracle from "ellipsoid:d1,...,dn"; used by the polar
/// checks, which need supports rather than radial oracles.
ConvexBodySupport parse_support(const std::string& descriptor);

/// MSet descriptors: "lp-curve:p:resolution" or "mset:path" pointing at a
/// JSON file {arity, points: [[...], ...]}.
MSet parse_mset(const std::string& descriptor);

void save_mset(const MSet& m, const std::string& path);

} // namespace ostar

#endif // OSTAR_DESCRIPTORS_HPP
