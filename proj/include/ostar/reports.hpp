#ifndef OSTAR_REPORTS_HPP
#define OSTAR_REPORTS_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ostar/inequalities.hpp"
#include "ostar/integrate.hpp"

namespace ostar {

nlohmann::ordered_json to_json(const IneqReport& r);
nlohmann::ordered_json to_json(const VariationReport& r);
nlohmann::ordered_json to_json(const MixedVolumeReport& r);

/// CSV rows (name, seed, lhs, rhs, slack, satisfied, equality), one per
/// report, plus a header line.
std::string sweep_csv(const SweepSummary& s);

/// {min_slack, violations, equality_cases}.
nlohmann::ordered_json sweep_summary_json(const SweepSummary& s);

/// Fixed 17-significant-digit formatting so artifacts are byte-stable.
std::string format_double(double v);

} // namespace ostar

#endif // OSTAR_REPORTS_HPP
