#include "ostar/descriptors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ostar/gridfile.hpp"

namespace ostar {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& p : split(s, ',')) out.push_back(std::stod(p));
    return out;
}

} // namespace

StarBody parse_body(const std::string& descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts.empty()) throw std::invalid_argument("parse_body: empty descriptor");
    const std::string& kind = parts[0];

    if (kind == "ball") {
        if (parts.size() != 3)
            throw std::invalid_argument("parse_body: ball:n:r");
        return make_ball(std::stoi(parts[1]), std::stod(parts[2]));
    }
    if (kind == "fourier") {
        if (parts.size() < 2 || parts.size() % 2 != 0)
            throw std::invalid_argument("parse_body: fourier:base:k:a[:k:a...]");
        const double base = std::stod(parts[1]);
        std::vector<std::pair<int, double>> amps;
        for (size_t i = 2; i + 1 < parts.size(); i += 2)
            amps.emplace_back(std::stoi(parts[i]), std::stod(parts[i + 1]));
        return make_fourier_star(base, amps);
    }
    if (kind == "ellipsoid") {
        if (parts.size() != 2)
            throw std::invalid_argument("parse_body: ellipsoid:d1,...,dn");
        const auto d = parse_doubles(parts[1]);
        if (d.size() < 2)
            throw std::invalid_argument("parse_body: ellipsoid needs n >= 2 axes");
        return linear_image(make_ball(static_cast<int>(d.size()), 1.0),
                            LinearMap::diagonal(d));
    }
    if (kind == "grid") {
        if (parts.size() != 2) throw std::invalid_argument("parse_body: grid:path");
        return load_grid_star_body(parts[1]);
    }
    if (kind == "star") {
        // star:n:seed, the seeded smooth test-body generator
        if (parts.size() != 3)
            throw std::invalid_argument("parse_body: star:n:seed");
        return make_random_smooth_star(std::stoi(parts[1]), std::stoull(parts[2]));
    }
    throw std::invalid_argument("parse_body: unknown body kind '" + kind + "'");
}

ConvexBodySupport parse_support(const std::string& descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts.size() == 2 && parts[0] == "ellipsoid")
        return make_ellipsoid_support(parse_doubles(parts[1]));
    throw std::invalid_argument(
        "parse_support: only 'ellipsoid:d1,...,dn' supports are scriptable");
}

MSet parse_mset(const std::string& descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts.empty()) throw std::invalid_argument("parse_mset: empty descriptor");
    if (parts[0] == "lp-curve") {
        if (parts.size() != 3)
            throw std::invalid_argument("parse_mset: lp-curve:p:resolution");
        return make_lp_curve_mset(std::stod(parts[1]), std::stoi(parts[2]));
    }
    if (parts[0] == "mset") {
        if (parts.size() != 2) throw std::invalid_argument("parse_mset: mset:path");
        std::ifstream in(parts[1]);
        if (!in) throw std::runtime_error("parse_mset: cannot open " + parts[1]);
        nlohmann::json j;
        in >> j;
        MSet m;
        m.arity = j.at("arity").get<int>();
        m.points = j.at("points").get<std::vector<std::vector<double>>>();
        m.validate();
        return m;
    }
    throw std::invalid_argument("parse_mset: unknown descriptor '" + parts[0] + "'");
}

void save_mset(const MSet& m, const std::string& path) {
    m.validate();
    nlohmann::ordered_json j;
    j["arity"] = m.arity;
    j["points"] = m.points;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_mset: cannot open " + path);
    out << j.dump(2) << "\n";
}

} // namespace ostar
