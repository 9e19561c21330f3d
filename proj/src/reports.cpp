#include "ostar/reports.hpp"

#include <cstdio>
#include <sstream>

namespace ostar {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::ordered_json to_json(const IneqReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["direction"] = r.direction == IneqDirection::GE ? ">=" : "<=";
    j["slack"] = r.slack;
    j["satisfied"] = r.satisfied;
    j["equality"] = r.equality;
    j["tol"] = r.tol;
    j["eq_tol"] = r.eq_tol;
    j["hypothesis"] = r.hypothesis;
    j["rule"] = r.rule;
    return j;
}

nlohmann::ordered_json to_json(const VariationReport& r) {
    nlohmann::ordered_json j;
    j["numeric_derivative"] = r.numeric_derivative;
    j["raw_slope"] = r.raw_slope;
    j["analytic_value"] = r.analytic_value;
    j["relative_error"] = r.relative_error;
    j["eps_schedule"] = r.eps_schedule;
    j["extrapolated"] = r.extrapolated;
    j["deriv_estimated"] = r.deriv_estimated;
    return j;
}

nlohmann::ordered_json to_json(const MixedVolumeReport& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    j["rule"] = r.rule;
    j["diagnostics"] = {{"ratio_min", r.ratio_min}, {"ratio_max", r.ratio_max}};
    return j;
}

std::string sweep_csv(const SweepSummary& s) {
    std::ostringstream os;
    os << "name,seed,lhs,rhs,slack,satisfied,equality\n";
    for (size_t i = 0; i < s.reports.size(); ++i) {
        const IneqReport& r = s.reports[i];
        os << r.name << "," << s.seeds[i] << "," << format_double(r.lhs) << ","
           << format_double(r.rhs) << "," << format_double(r.slack) << ","
           << (r.satisfied ? 1 : 0) << "," << (r.equality ? 1 : 0) << "\n";
    }
    return os.str();
}

nlohmann::ordered_json sweep_summary_json(const SweepSummary& s) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["min_slack"] = s.min_slack;
    j["violations"] = s.violations;
    j["equality_cases"] = s.equality_cases;
    return j;
}

} // namespace ostar
