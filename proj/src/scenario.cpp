#include "ostar/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ostar/descriptors.hpp"
#include "ostar/gridfile.hpp"
#include "ostar/inequalities.hpp"
#include "ostar/integrate.hpp"
#include "ostar/orlicz.hpp"
#include "ostar/reports.hpp"

namespace ostar {

namespace {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Scenario {
    std::map<std::string, std::string> bodies;
    std::map<std::string, std::string> supports;
    std::map<std::string, std::string> functions;
    std::map<std::string, std::string> rules;
    std::vector<nlohmann::json> tasks;
    std::filesystem::path root;
};

const std::vector<std::string> kKnownOps = {
    "volume",          "sum",   "mixed-volume", "check",
    "first-variation", "m-add", "intersection-body", "sweep"};

void require_declared(const nlohmann::json& task, const char* key,
                      const std::map<std::string, std::string>& names,
                      const char* what) {
    if (!task.contains(key)) return;
    const std::string v = task.at(key).get<std::string>();
    if (!names.count(v))
        throw ScenarioError(std::string("task references undeclared ") + what +
                            " '" + v + "'");
}

void validate(const Scenario& sc) {
    for (const auto& task : sc.tasks) {
        if (!task.contains("op"))
            throw ScenarioError("task without an 'op' field");
        const std::string op = task.at("op").get<std::string>();
        if (std::find(kKnownOps.begin(), kKnownOps.end(), op) == kKnownOps.end())
            throw ScenarioError("unknown op '" + op + "'");
        for (const char* key : {"body", "body2", "body3"})
            require_declared(task, key, sc.bodies, "body");
        for (const char* key : {"support", "support2"})
            require_declared(task, key, sc.supports, "support");
        for (const char* key : {"phi", "phi2"})
            require_declared(task, key, sc.functions, "function");
        for (const char* key : {"rule", "probe"})
            require_declared(task, key, sc.rules, "rule");
    }
}

Scenario load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }
    Scenario sc;
    sc.root = std::filesystem::path(path).parent_path();
    auto read_map = [&](const char* key, std::map<std::string, std::string>& out) {
        if (!j.contains(key)) return;
        for (const auto& [name, desc] : j.at(key).items())
            out[name] = desc.get<std::string>();
    };
    read_map("bodies", sc.bodies);
    read_map("supports", sc.supports);
    read_map("functions", sc.functions);
    read_map("rules", sc.rules);
    if (j.contains("tasks"))
        for (const auto& t : j.at("tasks")) sc.tasks.push_back(t);
    validate(sc);
    return sc;
}

class Runner {
public:
    explicit Runner(Scenario sc) : sc_(std::move(sc)) {}

    int run() {
        int failures = 0;
        int violations = 0;
        for (size_t i = 0; i < sc_.tasks.size(); ++i) {
            try {
                violations += run_task(sc_.tasks[i]);
            } catch (const std::exception& e) {
                std::cerr << "task " << i << " failed: " << e.what() << "\n";
                ++failures;
            }
        }
        if (violations > 0)
            std::cout << "inequality violations recorded: " << violations << "\n";
        return failures == 0 ? 0 : 1;
    }

private:
    StarBody body(const nlohmann::json& task, const char* key) const {
        return parse_body(sc_.bodies.at(task.at(key).get<std::string>()));
    }
    SphericalRule rule(const nlohmann::json& task, const char* key) const {
        return parse_rule(sc_.rules.at(task.at(key).get<std::string>()));
    }
    std::string fn_descriptor(const nlohmann::json& task, const char* key) const {
        const std::string name = task.at(key).get<std::string>();
        return sc_.functions.at(name);
    }
    std::filesystem::path out_path(const nlohmann::json& task,
                                   const char* key = "out") const {
        const std::filesystem::path raw = task.at(key).get<std::string>();
        const std::filesystem::path p = raw.is_absolute() ? raw : sc_.root / raw;
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        return p;
    }
    void write_json(const nlohmann::json& j, const std::filesystem::path& p) const {
        std::ofstream out(p);
        if (!out) throw std::runtime_error("cannot open output " + p.string());
        out << j.dump(2) << "\n";
    }

    // Returns the number of inequality violations this task produced.
    int run_task(const nlohmann::json& task) {
        const std::string op = task.at("op").get<std::string>();

        if (op == "volume") {
            const StarBody k = body(task, "body");
            const SphericalRule r = rule(task, "rule");
            nlohmann::ordered_json j;
            j["op"] = "volume";
            j["body"] = k.label;
            j["rule"] = r.descriptor();
            j["value"] = volume(k, r);
            const double se = volume_standard_error(k, r);
            if (se > 0.0) j["standard_error"] = se;
            write_json(j, out_path(task));
            return 0;
        }

        if (op == "sum") {
            const StarBody k = body(task, "body");
            const StarBody l = body(task, "body2");
            const std::string desc = fn_descriptor(task, "phi");
            const SphericalRule probe = rule(task, "probe");
            double t = 0.0;
            StarBody s = is_log_descriptor(desc, &t)
                             ? log_combination(k, l, t)
                             : orlicz_sum(make_registry_function(desc, 2, k.dimension),
                                          {k, l});
            save_grid_star_body(s, probe.resolution(), out_path(task).string());
            return 0;
        }

        if (op == "mixed-volume") {
            const StarBody k = body(task, "body");
            const StarBody l = body(task, "body2");
            const SphericalRule r = rule(task, "rule");
            const MixedIntegrand f =
                make_mixed_integrand(fn_descriptor(task, "phi"), k.dimension);
            write_json(to_json(dual_orlicz_mixed_volume(f, k, l, r)), out_path(task));
            return 0;
        }

        if (op == "check") {
            const std::string name = task.at("name").get<std::string>();
            const SphericalRule r = rule(task, "rule");
            IneqReport rep;
            if (name == "dual-orlicz-bm") {
                const StarBody k = body(task, "body");
                const StarBody l = body(task, "body2");
                rep = check_dual_orlicz_bm(
                    make_registry_function(fn_descriptor(task, "phi"), 2, k.dimension),
                    {k, l}, r);
            } else if (name == "dual-log-bm") {
                rep = check_dual_log_bm(body(task, "body"), body(task, "body2"),
                                        task.value("t", 0.5), r);
            } else if (name == "dual-orlicz-minkowski") {
                const StarBody k = body(task, "body");
                rep = check_dual_orlicz_minkowski(
                    make_mixed_integrand(fn_descriptor(task, "phi"), k.dimension),
                    k, body(task, "body2"), r);
            } else if (name == "dual-log-minkowski") {
                rep = check_dual_log_minkowski(body(task, "body"),
                                               body(task, "body2"), r);
            } else if (name == "polar-log") {
                rep = check_polar_log(
                    parse_support(sc_.supports.at(task.at("support").get<std::string>())),
                    parse_support(sc_.supports.at(task.at("support2").get<std::string>())),
                    r);
            } else {
                throw std::runtime_error("unknown check '" + name + "'");
            }
            write_json(to_json(rep), out_path(task));
            return rep.satisfied ? 0 : 1;
        }

        if (op == "first-variation") {
            const StarBody k = body(task, "body");
            const StarBody l = body(task, "body2");
            const SphericalRule r = rule(task, "rule");
            const OrliczFunction f1 =
                make_registry_function(fn_descriptor(task, "phi"), 1, k.dimension);
            const OrliczFunction f2 =
                make_registry_function(fn_descriptor(task, "phi2"), 1, k.dimension);
            write_json(to_json(first_variation_volume(f1, f2, k, l, r)),
                       out_path(task));
            return 0;
        }

        if (op == "m-add") {
            const StarBody k = body(task, "body");
            const StarBody l = body(task, "body2");
            const MSet m = parse_mset(task.at("mset").get<std::string>());
            const SphericalRule probe = rule(task, "probe");
            save_grid_star_body(radial_m_sum(m, {k, l}), probe.resolution(),
                                out_path(task).string());
            return 0;
        }

        if (op == "intersection-body") {
            const StarBody k = body(task, "body");
            const SphericalRule r = rule(task, "rule");
            const double p = task.at("p").get<double>();
            const double eta = task.value("eta", 1e-3);
            std::vector<double> ucoords;
            if (task.contains("u"))
                ucoords = task.at("u").get<std::vector<double>>();
            else
                ucoords = Direction::axis(k.dimension, 0).coords();
            const auto res = intersection_body_radial_power(
                k, p, Direction::from_vector(ucoords), r, eta);
            nlohmann::ordered_json j;
            j["op"] = "intersection-body";
            j["p"] = p;
            j["eta"] = eta;
            j["value"] = res.value;
            j["excluded_fraction"] = res.excluded_fraction;
            j["guarded"] = res.guarded;
            j["rule"] = r.descriptor();
            write_json(j, out_path(task));
            return 0;
        }

        if (op == "sweep") {
            const std::string name = task.at("name").get<std::string>();
            const SphericalRule r = rule(task, "rule");
            const int n = task.value("dimension", r.dimension());
            const SweepSummary summary = sweep_check(
                name, n, task.at("count").get<int>(),
                task.at("seed").get<std::uint64_t>(), r,
                task.contains("phi") ? fn_descriptor(task, "phi") : "",
                task.value("t", 0.5));
            if (task.contains("out_csv")) {
                std::ofstream csv(out_path(task, "out_csv"));
                csv << sweep_csv(summary);
            }
            write_json(sweep_summary_json(summary), out_path(task));
            return summary.violations;
        }

        throw std::runtime_error("unknown op '" + op + "'");
    }

    Scenario sc_;
};

} // namespace

int run_scenario(const std::string& path) {
    try {
        Scenario sc = load(path);
        Runner runner(std::move(sc));
        return runner.run();
    } catch (const ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ostar
