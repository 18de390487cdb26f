// Command-line front end: diagrams, scripts, ribbons, scenarios, framing check.

#include <algorithm>
#include <filesystem>
#include <thread>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frontkit/error.hpp"
#include "frontkit/framing.hpp"
#include "frontkit/front_io.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/moves.hpp"
#include "frontkit/render.hpp"
#include "frontkit/ribbon.hpp"
#include "frontkit/scenarios.hpp"
#include "frontkit/script.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace fk;

namespace {

std::string extension(const std::string& path) { return std::filesystem::path(path).extension().string(); }

std::string component_key(const FrontDiagram& d, ComponentId c) {
  const std::string& label = d.attr(c).label;
  return label.empty() ? "c" + std::to_string(c) : label;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

json step_json(const StepResult& r) {
  return json{{"index", r.index},         {"panel", r.panel},         {"move", r.move},
              {"site", r.site},           {"events", r.events},       {"crossings", r.crossings},
              {"components", r.components}};
}

json invariants_json(const FrontDiagram& d) {
  json out;
  out["diagram"] = d.name;
  out["spin"] = d.spin;
  json comps = json::object();
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    json entry;
    entry["coefficient"] = coefficient_text(d.attr(c).coefficient);
    if (d.spin == 0 && d.closed()) {
      const ClassicalInvariants ci = classical_invariants(d, c);
      entry["tb"] = ci.tb;
      entry["rot"] = ci.rot;
      entry["writhe"] = ci.writhe;
    }
    comps[component_key(d, c)] = entry;
  }
  out["components"] = comps;
  const HandleCensus census = handle_census(d);
  json counts = json::object();
  for (auto [index, count] : census.counts) counts[std::to_string(index)] = count;
  out["census"] = counts;
  out["chi"] = census.euler;
  if (d.spin == 0 && d.closed()) {
    const LinkingData lk = linking_matrix(d);
    json names = json::array(), plus = json::array();
    for (ComponentId c : lk.minus_components) names.push_back(component_key(d, c));
    for (ComponentId c : lk.plus_unknots) plus.push_back(component_key(d, c));
    out["linking"] = json{{"components", names}, {"matrix", lk.matrix}, {"plus_unknots", plus},
                          {"over_ones", lk.over_ones}};
    out["h1"] = homology_presentation(d);
  }
  return out;
}

void print_invariants(const FrontDiagram& d) {
  const json j = invariants_json(d);
  std::cout << "diagram " << d.name << " (spin " << d.spin << ")\n";
  for (const auto& [key, entry] : j["components"].items()) {
    std::cout << "  " << key << " coeff " << entry["coefficient"].get<std::string>();
    if (entry.contains("tb"))
      std::cout << "  tb " << entry["tb"] << "  rot " << entry["rot"] << "  writhe " << entry["writhe"];
    std::cout << "\n";
  }
  std::cout << "  chi " << j["chi"] << "\n";
  if (j.contains("h1")) {
    std::cout << "  h1 ";
    if (j["h1"].empty()) std::cout << "trivial";
    for (const auto& f : j["h1"]) std::cout << (f.get<std::int64_t>() == 0 ? "Z" : "Z/" + f.dump()) << " ";
    std::cout << "\n";
  }
}

json surface_json(const SurfaceInvariants& s) {
  return json{{"genus", s.genus},           {"boundary_components", s.boundary_components},
              {"euler", s.euler},           {"orientable", s.orientable},
              {"components", s.components}};
}

void print_surface(const SurfaceInvariants& s) {
  std::cout << (s.orientable ? "genus " : "crosscaps ") << s.genus << ", boundary circles "
            << s.boundary_components << ", euler " << s.euler << (s.orientable ? "" : ", non-orientable") << "\n";
}

json report_json(const ScenarioReport& r) {
  json steps = json::array();
  for (const StepResult& s : r.log) steps.push_back(step_json(s));
  json out{{"id", r.id}, {"pass", r.pass}, {"description", r.description}, {"checks", r.checks}, {"steps", steps}};
  if (!r.pass) out["error"] = r.message;
  out["wall_ms"] = r.wall_ms;
  return out;
}

int report_exit(const std::vector<ScenarioReport>& reports) {
  for (const ScenarioReport& r : reports)
    if (!r.pass) return exit_code(r.failure.value_or(ErrorKind::Assertion));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian front diagrams, bypass moves and disk-band surfaces"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string file, out, move, site_text;
  std::vector<std::string> move_args;
  auto* parse_cmd = app.add_subcommand("parse", "Validate a .front, .script or .ribbon file and print it canonically");
  parse_cmd->add_option("file", file)->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply one move to a front");
  apply_cmd->add_option("file", file)->required();
  apply_cmd->add_option("--move", move, "move name as in scripts")->required();
  apply_cmd->add_option("--site", site_text, "e0..e1/s0..s1");
  apply_cmd->add_option("--arg", move_args, "key=value move argument (repeatable)");
  apply_cmd->add_option("-o,--output", out, "output front (default stdout)");

  auto* inv_cmd = app.add_subcommand("invariants", "Classical invariants, handle census, linking and H1");
  inv_cmd->add_option("file", file)->required();
  inv_cmd->add_flag("--json", as_json);

  auto* render_cmd = app.add_subcommand("render", "Draw a front as SVG");
  render_cmd->add_option("file", file)->required();
  render_cmd->add_option("-o,--output", out)->required();

  auto* norm_cmd = app.add_subcommand("normalize", "Greedy R1/R2 reduction");
  norm_cmd->add_option("file", file)->required();
  norm_cmd->add_option("-o,--output", out);

  auto* run_cmd = app.add_subcommand("run", "Replay a .script");
  run_cmd->add_option("file", file)->required();
  run_cmd->add_option("-o,--output", out, "write the final front here");
  run_cmd->add_flag("--json", as_json);

  auto* ribbon_cmd = app.add_subcommand("ribbon", "Disk-band surfaces");
  ribbon_cmd->require_subcommand(1);
  auto* rib_inv = ribbon_cmd->add_subcommand("invariants", "Genus, boundary circles, euler characteristic");
  rib_inv->add_option("file", file)->required();
  rib_inv->add_flag("--json", as_json);
  std::string target = "planar";
  auto* rib_norm = ribbon_cmd->add_subcommand("normalize", "Search clasp transpositions for a target surface");
  rib_norm->add_option("file", file)->required();
  rib_norm->add_option("--target", target)->check(CLI::IsMember({"planar", "connected"}));
  rib_norm->add_option("-o,--output", out);
  rib_norm->add_flag("--json", as_json);
  std::string disk;
  int position = 0;
  auto* rib_tr = ribbon_cmd->add_subcommand("transpose", "Swap two adjacent feet");
  rib_tr->add_option("file", file)->required();
  rib_tr->add_option("--disk", disk)->required();
  rib_tr->add_option("--at", position, "cyclic position of the first foot")->required();
  rib_tr->add_option("-o,--output", out);

  std::vector<std::string> ids;
  bool all = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string data_dir = default_data_dir();
  auto* verify_cmd = app.add_subcommand("verify", "Replay bundled scenarios");
  verify_cmd->add_option("ids", ids, "scenario ids");
  verify_cmd->add_flag("--all", all);
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--data", data_dir, "scenario data directory");
  verify_cmd->add_flag("--json", as_json);

  int n = 4, samples = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  auto* framing_cmd = app.add_subcommand("framing-check", "Numerically check the framing loop and its disk extension");
  framing_cmd->add_option("--n", n);
  framing_cmd->add_option("--samples", samples);
  framing_cmd->add_option("--tol", tol);
  framing_cmd->add_option("--seed", seed);
  framing_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ErrorKind::Parse);
  }

  try {
    if (*parse_cmd) {
      const std::string ext = extension(file);
      if (ext == ".script")
        std::cout << serialize_script(load_script(file));
      else if (ext == ".ribbon")
        std::cout << serialize_ribbon(load_ribbon(file));
      else
        std::cout << serialize_front(load_front(file));
      return 0;
    }
    if (*apply_cmd) {
      ScriptStep step;
      step.move = move;
      if (!site_text.empty()) step.site = parse_site(site_text);
      for (const std::string& kv : move_args) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Parse, "--arg expects key=value, got '" + kv + "'");
        step.args[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      emit(serialize_front(apply_step(load_front(file), step)), out);
      return 0;
    }
    if (*inv_cmd) {
      const FrontDiagram d = load_front(file);
      if (as_json)
        std::cout << invariants_json(d).dump(2) << "\n";
      else
        print_invariants(d);
      return 0;
    }
    if (*render_cmd) {
      write_text_file(out, render_svg(load_front(file)));
      return 0;
    }
    if (*norm_cmd) {
      emit(serialize_front(normalize(load_front(file))), out);
      return 0;
    }
    if (*run_cmd) {
      const ScriptRun r = run_script(load_script(file));
      if (as_json) {
        json steps = json::array();
        for (const StepResult& s : r.log) steps.push_back(step_json(s));
        std::cout << json{{"steps", steps}, {"final", serialize_front(r.final)}}.dump(2) << "\n";
      } else {
        for (const StepResult& s : r.log)
          std::cout << "step " << s.index << "  " << s.move << (s.site.empty() ? "" : " " + s.site) << "  events "
                    << s.events << "  crossings " << s.crossings << "\n";
      }
      if (!out.empty()) write_text_file(out, serialize_front(r.final));
      return 0;
    }
    if (*rib_inv) {
      const SurfaceInvariants s = surface_invariants(load_ribbon(file));
      if (as_json)
        std::cout << surface_json(s).dump(2) << "\n";
      else
        print_surface(s);
      return 0;
    }
    if (*rib_norm) {
      const DiskBandSurface s = load_ribbon(file);
      const SurfaceNormalization r =
          normalize_surface(s, target == "planar" ? SurfaceTarget::Planar : SurfaceTarget::ConnectedBoundary);
      if (as_json) {
        json steps = json::array();
        for (const TransposeStep& st : r.steps) steps.push_back(json{{"disk", s.disks[st.disk]}, {"at", st.position}});
        std::cout << json{{"steps", steps}, {"explored", r.explored}, {"result", surface_json(r.invariants)}}.dump(2)
                  << "\n";
      } else {
        for (const TransposeStep& st : r.steps) std::cout << "transpose " << s.disks[st.disk] << " at " << st.position << "\n";
        print_surface(r.invariants);
      }
      if (!out.empty()) write_text_file(out, serialize_ribbon(r.result));
      return 0;
    }
    if (*rib_tr) {
      const DiskBandSurface s = load_ribbon(file);
      const auto it = std::find(s.disks.begin(), s.disks.end(), disk);
      if (it == s.disks.end()) fail_precondition("no disk '" + disk + "'");
      emit(serialize_ribbon(clasp_transpose(s, static_cast<int>(it - s.disks.begin()), position)), out);
      return 0;
    }
    if (*verify_cmd) {
      if (all) ids = scenario_ids();
      if (ids.empty()) throw Error(ErrorKind::Parse, "verify: name scenario ids or pass --all");
      for (const std::string& id : ids) scenario_description(id);  // reject unknown ids up front
      std::vector<ScenarioReport> reports;
      if (all) {
        reports = verify_all(data_dir, jobs);
      } else {
        for (const std::string& id : ids) reports.push_back(verify_scenario(id, data_dir));
      }
      if (as_json) {
        json arr = json::array();
        for (const ScenarioReport& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const ScenarioReport& r : reports) {
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  (" << r.log.size() << " steps, " << r.checks.size()
                    << " checks)";
          if (!r.pass) std::cout << "  " << r.message;
          std::cout << "\n";
        }
      }
      return report_exit(reports);
    }
    if (*framing_cmd) {
      const FramingReport r = framing_map_check(n, samples, tol, seed);
      if (as_json) {
        std::cout << json{{"n", r.n},
                          {"samples", r.samples},
                          {"tol", r.tol},
                          {"pass", r.pass},
                          {"loop_orthogonality", r.loop_orthogonality},
                          {"loop_determinant", r.loop_determinant},
                          {"loop_identity_at_zero", r.loop_identity_at_zero},
                          {"disk_orthogonality", r.disk_orthogonality},
                          {"disk_determinant", r.disk_determinant},
                          {"disk_first_column", r.disk_first_column},
                          {"disk_boundary", r.disk_boundary},
                          {"worst", r.worst}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << (r.pass ? "PASS" : "FAIL") << " n=" << r.n << " samples=" << r.samples << " tol=" << r.tol
                  << "\n  loop: orthogonality " << r.loop_orthogonality << ", det " << r.loop_determinant
                  << ", t=0 " << r.loop_identity_at_zero << "\n  disk: orthogonality " << r.disk_orthogonality
                  << ", det " << r.disk_determinant << ", first column " << r.disk_first_column << ", r=1 "
                  << r.disk_boundary << "\n";
        if (!r.pass) std::cout << "  worst: " << r.worst << "\n";
      }
      return r.pass ? 0 : exit_code(ErrorKind::Assertion);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::Io);
  }
  return 0;
}
