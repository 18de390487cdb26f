#include "frontkit/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <thread>

#include "frontkit/families.hpp"
#include "frontkit/front_io.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/moves.hpp"
#include "frontkit/ribbon.hpp"

#ifndef FRONTKIT_DATA_DIR
#define FRONTKIT_DATA_DIR "data"
#endif

namespace fk {

namespace {

namespace fs = std::filesystem;

struct Context {
  std::string data;
  ScenarioReport& report;

  std::string path(const std::string& rel) const { return (fs::path(data) / rel).string(); }
  void expect(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::Assertion, "expected " + what);
    report.checks.push_back(what);
  }
  ScriptRun run(const MoveScript& s) {
    ScriptRun r = run_script(s);
    report.log.insert(report.log.end(), r.log.begin(), r.log.end());
    return r;
  }
};

bool same_steps(const MoveScript& a, const MoveScript& b) {
  if (a.steps.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    ScriptStep x = a.steps[i], y = b.steps[i];
    x.line = y.line = 0;
    if (!(x == y)) return false;
  }
  return true;
}

void example_2_1(Context& cx) {
  const MoveScript s = load_script(cx.path("scripts/example-2-1.script"));
  const int before = handle_census(s.initial).euler;
  const FrontDiagram out = cx.run(s).final;
  cx.expect(out.events.empty() && out.component_count() == 0, "the diagram empties");
  cx.expect(before == 1 && handle_census(out).euler == 1, "euler characteristic 1 before and after");
}

void fig_destab(Context& cx) {
  const MoveScript s = load_script(cx.path("scripts/fig-destab.script"));
  const FrontDiagram& start = s.initial;
  const MoveSite zigzag = parse_site("1..5/1");
  const MoveScript fresh = destabilize_macro(start, 1, zigzag);
  cx.expect(same_steps(fresh, s), "the frozen script matches the generated macro");
  const FrontDiagram out = cx.run(s).final;
  const FrontDiagram direct = stabilize(start, 1, zigzag, StabilizeDirection::Destabilize);
  cx.expect(equivalent_up_to_normalization(out, direct), "final diagram equals the direct destabilization");
  cx.expect(out.events == load_front(cx.path("fronts/unknot.front")).events, "final word is the plain unknot");
  int panels = 0;
  for (const ScriptStep& st : s.steps) panels = std::max(panels, st.panel);
  cx.expect(panels == 10, "steps cover panels 2 to 10");
}

void fig_crossing_macro(Context& cx) {
  const MoveScript s = load_script(cx.path("scripts/fig-crossing-macro.script"));
  const MoveSite site = parse_site("2..3/2..3");
  cx.expect(same_steps(crossing_change_macro(s.initial, site), s), "the frozen script matches the generated macro");
  const FrontDiagram out = cx.run(s).final;
  const FrontDiagram primitive = crossing_change(s.initial, site);
  cx.expect(equivalent_up_to_normalization(out, primitive), "macro agrees with the primitive crossing change");
  const int lk_before = linking_number(s.initial, 1, 2), lk_after = linking_number(out, 1, 2);
  cx.expect(std::abs(lk_before - lk_after) == 1, "linking number changes by one");
}

void mazur(Context& cx) {
  const MoveScript s = load_script(cx.path("scripts/mazur.script"));
  const FrontDiagram& start = s.initial;
  cx.expect(homology_presentation(start).empty(), "H1 of the initial diagram is trivial");
  cx.expect(handle_census(start).euler == 1, "euler characteristic 1");
  cx.expect(observe(start, "passes[K,U]") == "3" && observe(start, "lk[K,U]") == "1",
            "the 2-handle runs over the 1-handle three times with linking number 1");
  const FrontDiagram out = cx.run(s).final;
  cx.expect(out.events.empty() && out.component_count() == 0, "the diagram empties");
}

void cieliebak(Context& cx) {
  std::vector<std::string> unrealizable;
  for (int k = -1; k <= 1; ++k)
    for (int m = 1; m <= 3; ++m) {
      const std::string pair = "(" + std::to_string(k) + "," + std::to_string(m) + ")";
      FrontDiagram d;
      try {
        d = cieliebak_front(k, m);
      } catch (const Error&) {
        unrealizable.push_back(pair);
        continue;
      }
      const ClassicalInvariants ci = classical_invariants(d, 1);
      const FamilyInvariants want = cieliebak_expected(k, m);
      cx.expect(ci.tb == want.tb && ci.rot == want.rot, pair + " has tb " + std::to_string(want.tb) + ", rot " +
                                                            std::to_string(want.rot));
      const FrontDiagram s = stabilize(d, 1, MoveSite{1, 1, 1, 1, {}}, StabilizeDirection::Stabilize);
      const ClassicalInvariants sc = classical_invariants(s, 1);
      const FamilyInvariants next = cieliebak_expected(k, m + 1);
      cx.expect(sc.tb == next.tb && sc.rot == next.rot, pair + " stabilized has the invariants of (" +
                                                            std::to_string(k) + "," + std::to_string(m + 1) + ")");
    }
  if (!unrealizable.empty()) {
    std::string list;
    for (const auto& p : unrealizable) list += (list.empty() ? "" : " ") + p;
    throw Error(ErrorKind::Precondition, "no Legendrian unknot has the required tb and rot for " + list);
  }
}

void ribbon_heegaard(Context& cx) {
  struct Case {
    const char* file;
    std::size_t planar_steps;
  };
  for (const Case& c : {Case{"ribbons/page-torus.ribbon", 1}, Case{"ribbons/page-genus2.ribbon", 2}}) {
    const DiskBandSurface page = load_ribbon(cx.path(c.file));
    const SurfaceInvariants start = surface_invariants(page);
    const SurfaceNormalization planar = normalize_surface(page, SurfaceTarget::Planar);
    DiskBandSurface replay = page;
    for (const TransposeStep& st : planar.steps) {
      replay = clasp_transpose(replay, st.disk, st.position);
      StepResult r;
      r.index = static_cast<int>(cx.report.log.size());
      r.move = "clasp-transpose";
      r.site = page.disks[st.disk] + "/" + std::to_string(st.position);
      cx.report.log.push_back(r);
    }
    const SurfaceInvariants flat = surface_invariants(replay);
    cx.expect(flat.genus == 0 && flat.euler == start.euler, std::string(c.file) + " becomes planar");
    cx.expect(planar.steps.size() == c.planar_steps,
              std::string(c.file) + " needs " + std::to_string(c.planar_steps) + " transposition(s)");
    const SurfaceNormalization back = normalize_surface(replay, SurfaceTarget::ConnectedBoundary);
    cx.expect(back.invariants.boundary_components == 1, std::string(c.file) + " regains one boundary circle");
  }
  const DiskBandSurface annulus = parse_ribbon("disk D\nband a D.1 D.2\n");
  try {
    normalize_surface(annulus, SurfaceTarget::ConnectedBoundary);
    cx.expect(false, "the annulus to be refused");
  } catch (const Error& e) {
    cx.expect(e.kind() == ErrorKind::Precondition, "even euler characteristic is refused");
  }
}

struct Entry {
  const char* id;
  const char* description;
  void (*run)(Context&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {"example-2-1", "trivial bypass cancellation empties the diagram", example_2_1},
      {"fig-destab", "destabilization by birth, slides, isotopy, unclasping and cancellation", fig_destab},
      {"fig-crossing-macro", "crossing change by stabilization, R2, commutation and unclasping", fig_crossing_macro},
      {"mazur", "crossing changes, slide off the 1-handle and cancel a contractible diagram", mazur},
      {"cieliebak", "disk bundle family invariants and the stabilization step m -> m+1", cieliebak},
      {"ribbon-heegaard", "clasp transpositions make pages planar or give them one boundary circle",
       ribbon_heegaard},
  };
  return table;
}

const Entry& entry(const std::string& id) {
  for (const Entry& e : entries())
    if (id == e.id) return e;
  fail_precondition("unknown scenario '" + id + "'");
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Entry& e : entries()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string scenario_description(const std::string& id) { return entry(id).description; }

std::string default_data_dir() { return FRONTKIT_DATA_DIR; }

ScenarioReport verify_scenario(const std::string& id, const std::string& data_dir) {
  const Entry& e = entry(id);
  ScenarioReport report;
  report.id = e.id;
  report.description = e.description;
  const auto t0 = std::chrono::steady_clock::now();
  Context cx{data_dir, report};
  try {
    e.run(cx);
    report.pass = true;
  } catch (const Error& err) {
    report.failure = err.kind();
    report.message = err.what();
  } catch (const std::exception& err) {
    report.failure = ErrorKind::Io;
    report.message = err.what();
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<ScenarioReport> verify_all(const std::string& data_dir, int jobs) {
  const auto& ids = scenario_ids();
  std::vector<ScenarioReport> out(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) out[i] = verify_scenario(ids[i], data_dir);
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(ids.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace fk
