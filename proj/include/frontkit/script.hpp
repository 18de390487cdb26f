#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frontkit/diagram.hpp"
#include "frontkit/moves.hpp"

namespace fk {

// One line of a `.script`: `<move> [site=..] [key=value ...] [assert key=value ...]`.
// Components are referenced by label so that steps survive renumbering.
struct ScriptStep {
  std::string move;
  std::optional<MoveSite> site;
  std::map<std::string, std::string> args;
  std::vector<std::pair<std::string, std::string>> asserts;
  int panel = 0;  // display group of the step, 0 if none
  int line = 0;   // source line, 0 when built in code
  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

struct MoveScript {
  FrontDiagram initial;
  std::string use_path;  // `use` header, kept for serialization
  std::vector<ScriptStep> steps;
};

struct StepResult {
  int index = 0;
  int panel = 0;
  std::string move;
  std::string site;
  int events = 0;
  int crossings = 0;
  int components = 0;
};

struct ScriptRun {
  FrontDiagram final;
  std::vector<StepResult> log;
};

// Parses script text; `use` paths are resolved against `base_dir`. With
// `initial` given, the `use` header is optional and the diagram is not loaded.
MoveScript parse_script(std::string_view text, const std::string& base_dir,
                        const std::optional<FrontDiagram>& initial = std::nullopt);
MoveScript load_script(const std::string& path);
std::string serialize_script(const MoveScript& script);

// Applies one step (without its assertions).
FrontDiagram apply_step(const FrontDiagram& d, const ScriptStep& step);
// Checks `key=value` against d; throws Error(Assertion) on mismatch.
void check_assertion(const FrontDiagram& d, const std::string& key, const std::string& value);
// Value a `key` would have to take for check_assertion to pass.
std::string observe(const FrontDiagram& d, const std::string& key);

// Runs all steps; any failure is rethrown with the same kind as
// "step <i> (<move>): ...", steps counted from 0.
ScriptRun run_script(const MoveScript& script);

// Destabilization of the zigzag at `site` on component c (spin 0):
// birth a canceling pair, slide c over the new (-1) handle, isotope the zigzag
// into a self-clasped cusp, unclasp, slide back, remove the fishtail, cancel.
// Steps carry panel numbers and event-count assertions; the script is
// validated by replay before it is returned.
MoveScript destabilize_macro(const FrontDiagram& d, ComponentId c, const MoveSite& site);

// Crossing change as double stabilization, R2, commutation and unclasping.
MoveScript crossing_change_macro(const FrontDiagram& d, const MoveSite& site);

}  // namespace fk
