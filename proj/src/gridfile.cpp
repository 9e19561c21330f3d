#include "ostar/gridfile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ostar/quadrature.hpp"

namespace ostar {

namespace {

std::vector<double> sample_circle(const StarBody& k, int n_theta) {
    std::vector<double> v(static_cast<size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i)
        v[static_cast<size_t>(i)] = k.rho(Direction::angle_2d(2.0 * M_PI * i / n_theta));
    return v;
}

} // namespace

nlohmann::ordered_json grid_star_body_json(const StarBody& k, int resolution) {
    if (resolution < 4)
        throw std::invalid_argument("grid_star_body_json: resolution must be >= 4");
    nlohmann::ordered_json j;
    j["dimension"] = k.dimension;
    if (k.dimension == 2) {
        j["grid_shape"] = std::vector<int>{resolution};
        j["values"] = sample_circle(k, resolution);
    } else if (k.dimension == 3) {
        std::vector<double> gx, gw;
        gauss_legendre(resolution, gx, gw);
        const int naz = 2 * resolution;
        std::vector<double> values;
        values.reserve(static_cast<size_t>(resolution) * naz);
        for (int i = 0; i < resolution; ++i) {
            const double polar = std::acos(gx[static_cast<size_t>(i)]);
            for (int a = 0; a < naz; ++a)
                values.push_back(
                    k.rho(Direction::polar_3d(polar, 2.0 * M_PI * a / naz)));
        }
        j["grid_shape"] = std::vector<int>{resolution, naz};
        j["polar_cosines"] = gx;
        j["values"] = values;
    } else {
        throw std::invalid_argument(
            "grid_star_body_json: grid format is defined for n = 2 and n = 3");
    }
    j["label"] = k.label;
    return j;
}

void save_grid_star_body(const StarBody& k, int resolution,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_grid_star_body: cannot open " + path);
    out << grid_star_body_json(k, resolution).dump(2) << "\n";
}

StarBody grid_star_body_from_json(const nlohmann::json& j) {
    const int dim = j.at("dimension").get<int>();
    const auto shape = j.at("grid_shape").get<std::vector<int>>();
    const auto values = j.at("values").get<std::vector<double>>();
    const std::string label = j.value("label", "grid-body");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("grid body: values must be finite and >= 0");

    StarBody b;
    b.dimension = dim;
    b.label = label;
    const double vmax = *std::max_element(values.begin(), values.end());
    const double vmin = *std::min_element(values.begin(), values.end());
    b.upper_bound = vmax;
    b.lower_bound = vmin;
    b.positive = vmin > 0.0;
    b.continuous = true;

    if (dim == 2) {
        if (shape.size() != 1 || shape[0] < 4 ||
            values.size() != static_cast<size_t>(shape[0]))
            throw std::invalid_argument("grid body: bad 2-d shape");
        const int n = shape[0];
        b.radial = [values, n](const Direction& u) {
            const double t = u.theta() * n / (2.0 * M_PI);
            const int i0 = static_cast<int>(std::floor(t)) % n;
            const int i1 = (i0 + 1) % n;
            const double f = t - std::floor(t);
            return (1.0 - f) * values[static_cast<size_t>(i0)] +
                   f * values[static_cast<size_t>(i1)];
        };
        return b;
    }

    if (dim == 3) {
        if (shape.size() != 2 ||
            values.size() != static_cast<size_t>(shape[0]) * shape[1])
            throw std::invalid_argument("grid body: bad 3-d shape");
        const int npol = shape[0];
        const int naz = shape[1];
        const auto cosines = j.at("polar_cosines").get<std::vector<double>>();
        if (static_cast<int>(cosines.size()) != npol)
            throw std::invalid_argument("grid body: polar_cosines length mismatch");

        // Rows sorted by polar angle (descending cosine), plus collapsed
        // single-value pole rows at 0 and pi.
        std::vector<int> order(static_cast<size_t>(npol));
        for (int i = 0; i < npol; ++i) order[static_cast<size_t>(i)] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return cosines[static_cast<size_t>(a)] > cosines[static_cast<size_t>(b)]; });
        std::vector<double> theta(static_cast<size_t>(npol));
        std::vector<std::vector<double>> rows(static_cast<size_t>(npol));
        for (int r = 0; r < npol; ++r) {
            const int src = order[static_cast<size_t>(r)];
            theta[static_cast<size_t>(r)] = std::acos(cosines[static_cast<size_t>(src)]);
            rows[static_cast<size_t>(r)].assign(
                values.begin() + static_cast<long>(src) * naz,
                values.begin() + (static_cast<long>(src) + 1) * naz);
        }
        auto row_mean = [naz](const std::vector<double>& row) {
            double s = 0.0;
            for (double v : row) s += v;
            return s / naz;
        };
        const double pole_top = row_mean(rows.front());
        const double pole_bottom = row_mean(rows.back());

        b.radial = [theta, rows, naz, pole_top, pole_bottom](const Direction& u) {
            const double pol = std::acos(std::clamp(u[2], -1.0, 1.0));
            double az = std::atan2(u[1], u[0]);
            if (az < 0.0) az += 2.0 * M_PI;

            auto row_value = [&](const std::vector<double>& row) {
                const double t = az * naz / (2.0 * M_PI);
                const int a0 = static_cast<int>(std::floor(t)) % naz;
                const int a1 = (a0 + 1) % naz;
                const double f = t - std::floor(t);
                return (1.0 - f) * row[static_cast<size_t>(a0)] +
                       f * row[static_cast<size_t>(a1)];
            };

            if (pol <= theta.front()) {
                const double span = theta.front();
                const double f = span > 0.0 ? pol / span : 1.0;
                return (1.0 - f) * pole_top + f * row_value(rows.front());
            }
            if (pol >= theta.back()) {
                const double span = M_PI - theta.back();
                const double f = span > 0.0 ? (pol - theta.back()) / span : 0.0;
                return (1.0 - f) * row_value(rows.back()) + f * pole_bottom;
            }
            const auto it = std::upper_bound(theta.begin(), theta.end(), pol);
            const size_t hi = static_cast<size_t>(it - theta.begin());
            const size_t lo = hi - 1;
            const double f = (pol - theta[lo]) / (theta[hi] - theta[lo]);
            return (1.0 - f) * row_value(rows[lo]) + f * row_value(rows[hi]);
        };
        return b;
    }

    throw std::invalid_argument("grid body: only n = 2 and n = 3 are supported");
}

StarBody load_grid_star_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_grid_star_body: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return grid_star_body_from_json(j);
}

} // namespace ostar
