#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontkit/error.hpp"
#include "frontkit/script.hpp"

namespace fk {

struct ScenarioReport {
  std::string id;
  std::string description;
  bool pass = false;
  std::optional<ErrorKind> failure;  // set when pass is false
  std::string message;
  std::vector<StepResult> log;
  std::vector<std::string> checks;  // final-state predicates that held
  double wall_ms = 0;
};

const std::vector<std::string>& scenario_ids();
std::string scenario_description(const std::string& id);

// Data directory of the source tree, fixed at build time.
std::string default_data_dir();

// Replays one bundled scenario; never throws for replay failures, which are
// reported. Unknown ids throw Error(Precondition).
ScenarioReport verify_scenario(const std::string& id, const std::string& data_dir);
// All scenarios on up to `jobs` threads, reports in scenario_ids() order.
std::vector<ScenarioReport> verify_all(const std::string& data_dir, int jobs);

}  // namespace fk
