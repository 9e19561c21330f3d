#ifndef OSTAR_SCENARIO_HPP
#define OSTAR_SCENARIO_HPP

#include <string>

namespace ostar {

/// Runs a scenario file: named bodies/supports/functions/rules plus a task
/// list, all as descriptor strings. Artifacts are written relative to the
/// scenario's directory. Returns the process exit code: 0 on success, 1 if
/// any task failed at runtime, 2 on parse/validation errors. Inequality
/// violations are data, not errors; they are summarized, not fatal.
int run_scenario(const std::string& path);

} // namespace ostar

#endif // OSTAR_SCENARIO_HPP
