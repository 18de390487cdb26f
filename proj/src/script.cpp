#include "frontkit/script.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <sstream>

#include "frontkit/error.hpp"
#include "frontkit/front_io.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/transport.hpp"
#include "frontkit/word.hpp"

namespace fk {

namespace {

const std::vector<std::string>& known_moves() {
  static const std::vector<std::string> moves{
      "clasp",  "stabilize", "crossing-change", "reidemeister", "commute", "handleslide", "birth",
      "cancel", "trivial-bypass", "uplus", "normalize", "witness"};
  return moves;
}

const std::string& arg(const ScriptStep& step, const std::string& key) {
  auto it = step.args.find(key);
  if (it == step.args.end()) fail_precondition("missing argument '" + key + "'");
  return it->second;
}

ComponentId label_arg(const FrontDiagram& d, const ScriptStep& step, const std::string& key) {
  return d.require_label(arg(step, key));
}

const MoveSite& site_of(const ScriptStep& step) {
  if (!step.site) fail_precondition("missing site");
  return *step.site;
}

int int_arg(const ScriptStep& step, const std::string& key) {
  const std::string& v = arg(step, key);
  try {
    std::size_t used = 0;
    int out = std::stoi(v, &used);
    if (used == v.size()) return out;
  } catch (const std::exception&) {
  }
  fail_precondition("argument '" + key + "' is not an integer: '" + v + "'");
}

SlideVariant slide_variant(const std::string& v) {
  if (v == "minus-up") return SlideVariant::MinusUp;
  if (v == "minus-down") return SlideVariant::MinusDown;
  if (v == "plus-up") return SlideVariant::PlusUp;
  if (v == "plus-down") return SlideVariant::PlusDown;
  fail_precondition("unknown slide variant '" + v + "'");
}

ReidemeisterMove reidemeister_kind(const std::string& v) {
  if (v == "R1") return ReidemeisterMove::R1;
  if (v == "R2") return ReidemeisterMove::R2;
  if (v == "R3") return ReidemeisterMove::R3;
  fail_precondition("unknown Reidemeister move '" + v + "'");
}

std::string direction_arg(const ScriptStep& step, const std::string& a, const std::string& b) {
  const std::string& v = arg(step, "dir");
  if (v != a && v != b) fail_precondition("argument 'dir' must be " + a + " or " + b);
  return v;
}

// "tb[K]" -> ("tb", {"K"}); "lk[a,b]" -> ("lk", {"a","b"}).
std::pair<std::string, std::vector<std::string>> split_key(const std::string& key) {
  auto open = key.find('[');
  if (open == std::string::npos) return {key, {}};
  if (key.back() != ']') fail_precondition("malformed assertion key '" + key + "'");
  std::vector<std::string> parts;
  std::stringstream ss(key.substr(open + 1, key.size() - open - 2));
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  return {key.substr(0, open), parts};
}

int total_crossings(const FrontDiagram& d) {
  return static_cast<int>(std::count_if(d.events.begin(), d.events.end(),
                                        [](const Event& e) { return e.kind == EventKind::Crossing; }));
}

std::string join(const std::vector<std::int64_t>& v) {
  if (v.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string observe(const FrontDiagram& d, const std::string& key) {
  auto [name, refs] = split_key(key);
  auto need = [&](std::size_t n) {
    if (refs.size() != n) fail_precondition("assertion '" + key + "' needs " + std::to_string(n) + " label(s)");
  };
  if (name == "events") return std::to_string(d.events.size());
  if (name == "crossings") return std::to_string(total_crossings(d));
  if (name == "cusps") return std::to_string(static_cast<int>(d.events.size()) - total_crossings(d));
  if (name == "components") return std::to_string(d.component_count());
  if (name == "chi") return std::to_string(handle_census(d).euler);
  if (name == "empty") return d.events.empty() && d.left_count == 0 ? "true" : "false";
  if (name == "h1") return join(homology_presentation(d));
  if (name == "tb" || name == "rot" || name == "writhe") {
    need(1);
    ClassicalInvariants ci = classical_invariants(d, d.require_label(refs[0]));
    return std::to_string(name == "tb" ? ci.tb : name == "rot" ? ci.rot : ci.writhe);
  }
  if (name == "lk" || name == "passes") {
    need(2);
    ComponentId a = d.require_label(refs[0]), b = d.require_label(refs[1]);
    if (name == "lk") return std::to_string(linking_number(d, a, b));
    return std::to_string(CrossingData(d).crossings_between(a, b) / 2);
  }
  fail_precondition("unknown assertion '" + key + "'");
}

void check_assertion(const FrontDiagram& d, const std::string& key, const std::string& value) {
  const std::string got = observe(d, key);
  if (got != value) throw Error(ErrorKind::Assertion, "assertion " + key + "=" + value + " failed (got " + got + ")");
}

FrontDiagram apply_step(const FrontDiagram& d, const ScriptStep& step) {
  const std::string& m = step.move;
  if (m == "clasp")
    return clasp(d, site_of(step), direction_arg(step, "clasp", "unclasp") == "clasp" ? ClaspDirection::Clasp
                                                                                      : ClaspDirection::Unclasp);
  if (m == "stabilize")
    return stabilize(d, label_arg(d, step, "c"), site_of(step),
                     direction_arg(step, "stabilize", "destabilize") == "stabilize" ? StabilizeDirection::Stabilize
                                                                                     : StabilizeDirection::Destabilize);
  if (m == "crossing-change") return crossing_change(d, site_of(step));
  if (m == "reidemeister")
    return reidemeister(d, reidemeister_kind(arg(step, "move")), arg(step, "variant"),
                        direction_arg(step, "insert", "reduce") == "insert" ? RewriteDirection::Insert
                                                                            : RewriteDirection::Reduce,
                        site_of(step));
  if (m == "commute") return commute_at(d, int_arg(step, "at"));
  if (m == "handleslide")
    return handleslide(d, label_arg(d, step, "moving"), label_arg(d, step, "over"),
                       slide_variant(arg(step, "variant")), site_of(step));
  if (m == "birth") return birth_cancel_pair(d, site_of(step), BirthDirection::Birth);
  if (m == "cancel") {
    MoveSite refs;
    refs.refs = {label_arg(d, step, "plus"), label_arg(d, step, "minus")};
    return birth_cancel_pair(d, refs, BirthDirection::Cancel);
  }
  if (m == "trivial-bypass") return cancel_trivial_bypass(d, label_arg(d, step, "n"), label_arg(d, step, "np1"));
  if (m == "uplus") return uplus(d, label_arg(d, step, "a"), label_arg(d, step, "b"), site_of(step));
  if (m == "normalize") return normalize(d);
  if (m == "witness") {
    // The subcritical handle is read as a (+1)-surgery on a crossingless unknot.
    const ComponentId c = label_arg(d, step, "c");
    const ComponentAttr& a = d.attr(c);
    if (a.coefficient != Coefficient::Plus || a.node_plus || a.node_minus || CrossingData(d).self_crossings(c) != 0)
      fail_precondition("witness: '" + a.label + "' is not an undecorated (+1) unknot");
    return d;
  }
  fail_precondition("unknown move '" + m + "'");
}

ScriptRun run_script(const MoveScript& script) {
  ScriptRun run;
  run.final = script.initial;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& step = script.steps[i];
    try {
      run.final = apply_step(run.final, step);
      for (const auto& [k, v] : step.asserts) check_assertion(run.final, k, v);
    } catch (const Error& e) {
      std::string where = "step " + std::to_string(i) + " (" + step.move;
      if (step.line > 0) where += ", line " + std::to_string(step.line);
      throw Error(e.kind(), where + "): " + e.what());
    }
    StepResult r;
    r.index = static_cast<int>(i);
    r.panel = step.panel;
    r.move = step.move;
    r.site = step.site ? to_string(*step.site) : "";
    r.events = static_cast<int>(run.final.events.size());
    r.crossings = total_crossings(run.final);
    r.components = run.final.component_count();
    run.log.push_back(r);
  }
  return run;
}

MoveScript parse_script(std::string_view text, const std::string& base_dir,
                        const std::optional<FrontDiagram>& initial) {
  MoveScript script;
  bool have_initial = false;
  if (initial) {
    script.initial = *initial;
    have_initial = true;
  }
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens[0].first == "use") {
      if (tokens.size() != 2) throw ParseError(line_no, tokens[0].second, "expected 'use <file>'");
      if (!script.steps.empty()) throw ParseError(line_no, 1, "'use' must precede all steps");
      script.use_path = tokens[1].first;
      if (!initial) {
        std::filesystem::path p = std::filesystem::path(base_dir) / script.use_path;
        script.initial = load_front(p.string());
        have_initial = true;
      }
      continue;
    }
    if (!have_initial) throw ParseError(line_no, 1, "script must start with 'use <file>'");
    ScriptStep step;
    step.line = line_no;
    step.move = tokens[0].first;
    if (std::find(known_moves().begin(), known_moves().end(), step.move) == known_moves().end())
      throw ParseError(line_no, tokens[0].second, "unknown move '" + step.move + "'");
    bool asserting = false;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const auto& [tok, col] = tokens[t];
      if (tok == "assert") {
        asserting = true;
        continue;
      }
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line_no, col, "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
      if (asserting) {
        step.asserts.push_back({key, value});
      } else if (key == "site") {
        try {
          step.site = parse_site(value);
        } catch (const Error& e) {
          throw ParseError(line_no, col, e.what());
        }
      } else if (key == "panel") {
        try {
          step.panel = std::stoi(value);
        } catch (const std::exception&) {
          throw ParseError(line_no, col, "panel must be an integer");
        }
      } else {
        step.args[key] = value;
      }
    }
    script.steps.push_back(std::move(step));
  }
  if (!have_initial) throw ParseError(line_no + 1, 1, "script must start with 'use <file>'");
  return script;
}

MoveScript load_script(const std::string& path) {
  return parse_script(read_text_file(path), std::filesystem::path(path).parent_path().string());
}

std::string serialize_script(const MoveScript& script) {
  std::ostringstream out;
  if (!script.use_path.empty()) out << "use " << script.use_path << "\n";
  for (const ScriptStep& s : script.steps) {
    out << s.move;
    if (s.site) out << " site=" << to_string(*s.site);
    for (const auto& [k, v] : s.args) out << " " << k << "=" << v;
    if (s.panel) out << " panel=" << s.panel;
    if (!s.asserts.empty()) {
      out << " assert";
      for (const auto& [k, v] : s.asserts) out << " " << k << "=" << v;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

struct ChartMove {
  bool commute = false;
  ReidemeisterMove move = ReidemeisterMove::R1;
  const char* variant = "";
  RewriteDirection direction = RewriteDirection::Insert;
  int t = 0;     // chart event index
  int slot = 1;  // chart slot of the band's lowest strand
};

ChartMove swap_at(int t) { return {true, ReidemeisterMove::R1, "", RewriteDirection::Insert, t, 1}; }
ChartMove rule(ReidemeisterMove m, const char* v, RewriteDirection dir, int t, int slot) {
  return {false, m, v, dir, t, slot};
}

// Legendrian isotopy, rel boundary, of the one-strand chart L1 R2 L2 R1
// (zigzag) to L2 X1 X2 X2 R2 (a cusp clasped with its own strand). Found by
// breadth-first search over R-moves and commutations, frozen here. The first
// `kFirstHalf` moves form one panel, the rest the next.
const std::vector<ChartMove>& zigzag_to_clasped_cusp() {
  using R = ReidemeisterMove;
  constexpr auto ins = RewriteDirection::Insert;
  constexpr auto red = RewriteDirection::Reduce;
  static const std::vector<ChartMove> path{
      rule(R::R2, "left-below", ins, 2, 1), swap_at(1), swap_at(2), swap_at(3), swap_at(4),
      rule(R::R2, "left-below", red, 1, 1), rule(R::R2, "left-above", ins, 1, 2), swap_at(0), swap_at(3),
      rule(R::R1, "up", ins, 1, 2),         swap_at(0), rule(R::R1, "down", red, 4, 1), swap_at(3),
      rule(R::R2, "left-below", red, 1, 1), rule(R::R2, "left-above", ins, 0, 1),
      rule(R::R2, "right-above", ins, 4, 3), swap_at(3), swap_at(6), rule(R::R1, "down", red, 4, 2),
  };
  return path;
}
constexpr std::size_t kFirstHalf = 9;

ScriptStep chart_step(const ChartMove& cm, int e0, int offset, int panel) {
  ScriptStep s;
  s.panel = panel;
  if (cm.commute) {
    s.move = "commute";
    s.args["at"] = std::to_string(e0 + cm.t);
    return s;
  }
  const LocalRule& r = reidemeister_rule(cm.move, cm.variant);
  const auto& from = cm.direction == RewriteDirection::Insert ? r.simple : r.expanded;
  s.move = "reidemeister";
  s.args["move"] = cm.move == ReidemeisterMove::R1 ? "R1" : cm.move == ReidemeisterMove::R2 ? "R2" : "R3";
  s.args["variant"] = cm.variant;
  s.args["dir"] = cm.direction == RewriteDirection::Insert ? "insert" : "reduce";
  const int lo = cm.slot + offset;
  s.site = MoveSite{e0 + cm.t, e0 + cm.t + static_cast<int>(from.size()), lo, lo + r.width - 1, {}};
  return s;
}

ScriptStep make_step(std::string move, std::optional<MoveSite> site, std::map<std::string, std::string> args,
                     int panel) {
  ScriptStep s;
  s.move = std::move(move);
  s.site = std::move(site);
  s.args = std::move(args);
  s.panel = panel;
  return s;
}

// Freezes an event-count assertion at the end of every panel, then replays.
MoveScript finish_macro(MoveScript script) {
  FrontDiagram cur = script.initial;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    ScriptStep& s = script.steps[i];
    try {
      cur = apply_step(cur, s);
    } catch (const Error& e) {
      throw Error(e.kind(), "step " + std::to_string(i) + " (" + s.move + "): " + e.what());
    }
    const bool last_of_panel = i + 1 == script.steps.size() || script.steps[i + 1].panel != s.panel;
    if (last_of_panel) {
      s.asserts.push_back({"events", observe(cur, "events")});
      s.asserts.push_back({"crossings", observe(cur, "crossings")});
    }
  }
  run_script(script);
  return script;
}

}  // namespace

MoveScript destabilize_macro(const FrontDiagram& d, ComponentId c, const MoveSite& site) {
  auto fail0 = [](const std::string& why) { throw Error(ErrorKind::Precondition, "step 0 (destabilize): " + why); };
  if (d.spin != 0) fail0("the macro is only available for spin 0");
  if (c < 1 || c > d.component_count()) fail0("no component " + std::to_string(c));
  const int e0 = site.e0, s0 = site.s0, offset = s0 - 1;
  const std::vector<Event> zigzag = [&] {
    std::vector<Event> w = stabilize_rule().expanded;
    for (Event& e : w) e.position += offset;
    return w;
  }();
  Trace tr(d);
  const bool matches = site.e1 == e0 + 4 && e0 >= 0 && e0 + 4 <= static_cast<int>(d.events.size()) &&
                       std::equal(zigzag.begin(), zigzag.end(), d.events.begin() + e0) && tr.contains({e0, s0}) &&
                       tr.owner({e0, s0}) == c;
  if (!matches) fail0("site " + to_string(site) + " does not hold a stabilization zigzag of '" + d.attr(c).label + "'");

  const std::string k = d.attr(c).label;
  const std::string u = fresh_label(d.components, "U");
  const std::string y = fresh_label(d.components, "Y");
  MoveScript script;
  script.initial = d;
  auto& steps = script.steps;
  const int after = e0 + 4;
  steps.push_back(make_step("birth", MoveSite{after, after, s0 + 1, s0 + 1, {}}, {}, 2));
  const MoveSite slide_site{after + 3, after + 3, s0, s0 + 1, {}};
  steps.push_back(make_step("handleslide", slide_site, {{"moving", k}, {"over", y}, {"variant", "minus-up"}}, 3));
  const auto& path = zigzag_to_clasped_cusp();
  for (std::size_t i = 0; i < path.size(); ++i) steps.push_back(chart_step(path[i], e0, offset, i < kFirstHalf ? 4 : 6));
  steps.insert(steps.begin() + 2 + static_cast<long>(kFirstHalf), make_step("witness", std::nullopt, {{"c", u}}, 5));
  steps.push_back(make_step("clasp", MoveSite{e0 + 2, e0 + 4, s0 + 1, s0 + 2, {}}, {{"dir", "unclasp"}}, 7));
  // The band pattern sits where the forward slide left it, one event earlier:
  // the chart went from four events to five and lost two when unclasping.
  FrontDiagram born = apply_step(d, steps[0]);
  MoveSite pattern = slide_pattern_site(born, born.require_label(k), born.require_label(y), SlideVariant::MinusUp,
                                        slide_site);
  pattern.e0 -= 1;
  pattern.e1 -= 1;
  steps.push_back(make_step("handleslide", pattern, {{"moving", k}, {"over", y}, {"variant", "minus-down"}}, 8));
  steps.push_back(make_step("reidemeister", MoveSite{e0, e0 + 3, s0, s0, {}},
                            {{"move", "R1"}, {"variant", "up"}, {"dir", "reduce"}}, 9));
  steps.push_back(make_step("cancel", std::nullopt, {{"plus", u}, {"minus", y}}, 10));
  return finish_macro(std::move(script));
}

MoveScript crossing_change_macro(const FrontDiagram& d, const MoveSite& site) {
  if (d.spin != 0) fail_precondition("crossing change is only defined for spin 0");
  const int e = site.e0, p = site.s0;
  if (site.e1 != e + 1 || site.s1 != p + 1 || e < 0 || e >= static_cast<int>(d.events.size()) ||
      d.events[static_cast<std::size_t>(e)] != crossing(p))
    fail_precondition("crossing change: template mismatch, site " + to_string(site) + " is not a single crossing");
  Trace tr(d);
  const std::string strand = d.attr(tr.owner({e, p})).label;
  MoveScript script;
  script.initial = d;
  script.steps.push_back(
      make_step("stabilize", MoveSite{e, e, p, p, {}}, {{"c", strand}, {"dir", "stabilize"}}, 2));
  script.steps.push_back(make_step("reidemeister", MoveSite{e + 2, e + 3, p + 1, p + 1, {}},
                                   {{"move", "R2"}, {"variant", "left-above"}, {"dir", "insert"}}, 3));
  script.steps.push_back(make_step("commute", std::nullopt, {{"at", std::to_string(e + 4)}}, 4));
  script.steps.push_back(make_step("clasp", MoveSite{e + 5, e + 7, p, p + 1, {}}, {{"dir", "unclasp"}}, 5));
  return finish_macro(std::move(script));
}

}  // namespace fk
