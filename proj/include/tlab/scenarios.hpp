#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tlab/invariants.hpp"
#include "tlab/workspace.hpp"

namespace tlab {

enum class ScenarioStatus { Pass, Fail, Skip };

const char* to_string(ScenarioStatus s);

struct ScenarioResult {
  std::string scenario;
  std::string ring;
  ScenarioStatus status = ScenarioStatus::Skip;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  std::string reason;  // why a scenario was skipped or failed
  double elapsed_ms = 0;
};

/// Scenario identifiers in output order.
const std::vector<std::string>& scenario_ids();
bool is_scenario(const std::string& id);

/// Runs one scenario on the workspace ring. Failures are results, not errors;
/// unknown ids throw InputError.
ScenarioResult run_scenario(const std::string& id, const Workspace& ws);

/// Runs the given scenarios on every workspace, rings in parallel. Results are
/// ordered by (scenario id, ring name) regardless of scheduling.
std::vector<ScenarioResult> run_scenarios(const std::vector<std::string>& ids,
                                          const std::vector<Workspace>& workspaces, bool parallel = true);

/// Graded socle block: one copy of Omega^t k per generator of Ext^t(k, R),
/// t = depth R, each twisted by that generator's degree.
PresentedModule socle_block(const Ring& ring);

/// Standard modules shared by several scenarios: k, m, R, R/(x_i), k+k,
/// Omega^1 k, R+k, followed by the workspace's own modules.
std::vector<std::pair<std::string, PresentedModule>> test_modules(const Workspace& ws);

}  // namespace tlab
