#ifndef OSTAR_GRIDFILE_HPP
#define OSTAR_GRIDFILE_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ostar/geometry.hpp"

namespace ostar {

/// Grid-sampled star-body JSON: {dimension, grid_shape, values, label}.
/// n = 2: grid_shape = [N], node theta_i = 2 pi i / N.
/// n = 3: grid_shape = [N_polar, N_azimuth], row-major values, with the
/// Gauss-Legendre polar cosines recorded explicitly as "polar_cosines".
nlohmann::ordered_json grid_star_body_json(const StarBody& k, int resolution);

void save_grid_star_body(const StarBody& k, int resolution,
                         const std::string& path);

/// Reconstructs a star body from a grid file. Values interpolate linearly
/// in angle for n = 2 and bilinearly in (polar angle, azimuth) for n = 3,
/// with pole rows collapsed to single values (the mean of the nearest row).
StarBody grid_star_body_from_json(const nlohmann::json& j);

StarBody load_grid_star_body(const std::string& path);

} // namespace ostar

#endif // OSTAR_GRIDFILE_HPP
