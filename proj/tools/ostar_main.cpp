#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ostar/descriptors.hpp"
#include "ostar/gridfile.hpp"
#include "ostar/inequalities.hpp"
#include "ostar/integrate.hpp"
#include "ostar/orlicz.hpp"
#include "ostar/reports.hpp"
#include "ostar/scenario.hpp"

namespace {

using namespace ostar;

void emit(const nlohmann::ordered_json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file " + out);
    f << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual Orlicz star-set geometry toolkit"};
    app.require_subcommand(1);

    std::string body1, body2, phi, phi2, rule_desc, probe_desc, out, name,
        mset_desc, support1, support2, scenario_path, u_desc;
    double t = 0.5, p = 0.5, eta = 1e-3;

    auto* vol = app.add_subcommand("volume", "volume of a star body");
    vol->add_option("--body", body1)->required();
    vol->add_option("--rule", rule_desc)->required();
    vol->add_option("--out", out);

    auto* sum = app.add_subcommand("sum", "radial Orlicz sum of two bodies");
    sum->add_option("--phi", phi)->required();
    sum->add_option("--body", body1)->required();
    sum->add_option("--body2", body2)->required();
    sum->add_option("--probe", probe_desc)->required();
    sum->add_option("--out", out)->required();

    auto* mv = app.add_subcommand("mixed-volume", "dual Orlicz mixed volume");
    mv->add_option("--phi", phi)->required();
    mv->add_option("--body", body1)->required();
    mv->add_option("--body2", body2)->required();
    mv->add_option("--rule", rule_desc)->required();
    mv->add_option("--out", out);

    auto* chk = app.add_subcommand("check", "inequality check");
    chk->add_option("--name", name)->required();
    chk->add_option("--body", body1);
    chk->add_option("--body2", body2);
    chk->add_option("--support", support1);
    chk->add_option("--support2", support2);
    chk->add_option("--phi", phi);
    chk->add_option("--t", t);
    chk->add_option("--rule", rule_desc)->required();
    chk->add_option("--out", out);

    auto* fv = app.add_subcommand("first-variation",
                                  "volume slope along an Orlicz linear combination");
    fv->add_option("--phi", phi)->required();
    fv->add_option("--phi2", phi2)->required();
    fv->add_option("--body", body1)->required();
    fv->add_option("--body2", body2)->required();
    fv->add_option("--rule", rule_desc)->required();
    fv->add_option("--out", out);

    auto* ma = app.add_subcommand("m-add", "radial M-sum of two bodies");
    ma->add_option("--mset", mset_desc)->required();
    ma->add_option("--body", body1)->required();
    ma->add_option("--body2", body2)->required();
    ma->add_option("--probe", probe_desc);
    ma->add_option("--out", out);

    auto* ib = app.add_subcommand("intersection-body",
                                  "Orlicz intersection body radial (power case)");
    ib->add_option("--body", body1)->required();
    ib->add_option("--p", p)->required();
    ib->add_option("--u", u_desc, "direction as comma-separated coordinates");
    ib->add_option("--eta", eta);
    ib->add_option("--rule", rule_desc)->required();
    ib->add_option("--out", out);

    auto* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("scenario", scenario_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (vol->parsed()) {
            const StarBody k = parse_body(body1);
            const SphericalRule r = parse_rule(rule_desc);
            nlohmann::ordered_json j;
            j["value"] = volume(k, r);
            j["rule"] = r.descriptor();
            const double se = volume_standard_error(k, r);
            if (se > 0.0) j["standard_error"] = se;
            emit(j, out);
        } else if (sum->parsed()) {
            const StarBody k = parse_body(body1);
            const StarBody l = parse_body(body2);
            const SphericalRule probe = parse_rule(probe_desc);
            double tt = 0.0;
            const StarBody s =
                is_log_descriptor(phi, &tt)
                    ? log_combination(k, l, tt)
                    : orlicz_sum(make_registry_function(phi, 2, k.dimension), {k, l});
            save_grid_star_body(s, probe.resolution(), out);
        } else if (mv->parsed()) {
            const StarBody k = parse_body(body1);
            const StarBody l = parse_body(body2);
            emit(to_json(dual_orlicz_mixed_volume(
                     make_mixed_integrand(phi, k.dimension), k, l,
                     parse_rule(rule_desc))),
                 out);
        } else if (chk->parsed()) {
            const SphericalRule r = parse_rule(rule_desc);
            IneqReport rep;
            if (name == "dual-orlicz-bm") {
                const StarBody k = parse_body(body1);
                rep = check_dual_orlicz_bm(
                    make_registry_function(phi, 2, k.dimension),
                    {k, parse_body(body2)}, r);
            } else if (name == "dual-log-bm") {
                rep = check_dual_log_bm(parse_body(body1), parse_body(body2), t, r);
            } else if (name == "dual-orlicz-minkowski") {
                const StarBody k = parse_body(body1);
                rep = check_dual_orlicz_minkowski(
                    make_mixed_integrand(phi, k.dimension), k, parse_body(body2), r);
            } else if (name == "dual-log-minkowski") {
                rep = check_dual_log_minkowski(parse_body(body1), parse_body(body2), r);
            } else if (name == "polar-log") {
                rep = check_polar_log(parse_support(support1),
                                      parse_support(support2), r);
            } else {
                throw std::runtime_error("unknown check name '" + name + "'");
            }
            emit(to_json(rep), out);
            std::cout << rep.name << ": "
                      << (rep.satisfied ? "satisfied" : "VIOLATED")
                      << (rep.equality ? " (equality)" : "") << "\n";
        } else if (fv->parsed()) {
            const StarBody k = parse_body(body1);
            const StarBody l = parse_body(body2);
            const OrliczFunction f1 = make_registry_function(phi, 1, k.dimension);
            const OrliczFunction f2 = make_registry_function(phi2, 1, k.dimension);
            emit(to_json(first_variation_volume(f1, f2, k, l, parse_rule(rule_desc))),
                 out);
        } else if (ma->parsed()) {
            const StarBody k = parse_body(body1);
            const StarBody l = parse_body(body2);
            const MSet m = parse_mset(mset_desc);
            const int res = probe_desc.empty() ? 256 : parse_rule(probe_desc).resolution();
            if (out.empty()) throw std::runtime_error("m-add requires --out");
            save_grid_star_body(radial_m_sum(m, {k, l}), res, out);
        } else if (ib->parsed()) {
            const StarBody k = parse_body(body1);
            const SphericalRule r = parse_rule(rule_desc);
            std::vector<double> uc;
            if (u_desc.empty()) {
                uc = Direction::axis(k.dimension, 0).coords();
            } else {
                std::stringstream ss(u_desc);
                std::string item;
                while (std::getline(ss, item, ',')) uc.push_back(std::stod(item));
            }
            const auto res =
                intersection_body_radial_power(k, p, Direction::from_vector(uc), r, eta);
            nlohmann::ordered_json j;
            j["value"] = res.value;
            j["excluded_fraction"] = res.excluded_fraction;
            j["guarded"] = res.guarded;
            j["rule"] = r.descriptor();
            emit(j, out);
        } else if (run->parsed()) {
            return run_scenario(scenario_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
