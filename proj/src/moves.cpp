#include "frontkit/moves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "frontkit/error.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/transport.hpp"
#include "frontkit/validate.hpp"
#include "frontkit/word.hpp"

namespace fk {

namespace {

std::vector<Event> shifted(const std::vector<Event>& w, int by) {
  std::vector<Event> out = w;
  for (Event& e : out) e.position += by;
  return out;
}

int event_total(const FrontDiagram& d) { return static_cast<int>(d.events.size()); }

std::string range_text(int e0, int e1) { return std::to_string(e0) + ".." + std::to_string(e1); }

struct RewriteSpec {
  MoveSite site;
  int width = 1;
  std::vector<Event> from;
  std::vector<Event> to;
  std::string what;
  std::optional<ComponentId> primary;
  std::vector<std::pair<Node, ComponentAttr>> fresh;  // segments of the rewritten word
  std::string fresh_prefix = "c";
};

// Shared by every template move: bounds, literal match, spin mirroring, transport.
FrontDiagram apply_rewrite(const FrontDiagram& d, const RewriteSpec& spec) {
  const MoveSite& site = spec.site;
  const int n = event_total(d);
  if (site.e0 < 0 || site.e1 < site.e0 || site.e1 > n)
    fail_precondition(spec.what + ": site events " + range_text(site.e0, site.e1) + " lie outside the diagram");
  if (site.e1 - site.e0 != static_cast<int>(spec.from.size()))
    fail_precondition(spec.what + ": template mismatch, site covers " + std::to_string(site.e1 - site.e0) +
                      " events but the pattern has " + std::to_string(spec.from.size()));
  Trace tr(d);
  const int count = tr.count(site.e0);
  const bool band_ok = spec.width == 0 ? (site.s0 >= 1 && site.s0 <= count + 1)
                                       : (site.s0 >= 1 && site.s1 == site.s0 + spec.width - 1 && site.s1 <= count);
  if (!band_ok)
    fail_precondition(spec.what + ": strand range " + std::to_string(site.s0) + ".." + std::to_string(site.s1) +
                      " is not a band of " + std::to_string(spec.width) + " adjacent strands at time " +
                      std::to_string(site.e0));
  const int base = site.s0 - 1;
  const std::vector<Event> lhs = shifted(spec.from, base);
  if (!std::equal(lhs.begin(), lhs.end(), d.events.begin() + site.e0))
    fail_precondition(spec.what + ": template mismatch at events " + range_text(site.e0, site.e1) + " (expected " +
                      to_string(lhs) + ")");
  const std::vector<Event> rhs = shifted(spec.to, base);
  std::vector<Splice> splices{{site.e0, site.e1, rhs}};
  if (d.spin > 0) {
    const int m0 = n - site.e1, m1 = n - site.e0;
    const std::vector<Event> mirrored = mirror(rhs);
    if (m0 == site.e0 && m1 == site.e1) {
      if (mirrored != rhs)
        fail_precondition(spec.what + ": spin-symmetry conflict, the site straddles the axis and the rewrite is "
                          "not its own mirror image");
    } else if (m0 < site.e1 && site.e0 < m1) {
      fail_precondition(spec.what + ": spin-symmetry conflict, the site overlaps its mirror image");
    } else {
      splices.push_back({m0, m1, mirrored});
      std::sort(splices.begin(), splices.end(), [](const Splice& a, const Splice& b) { return a.begin < b.begin; });
    }
  }
  Transport how;
  how.links = splice_links(tr, splices);
  how.primary = spec.primary;
  how.fresh = spec.fresh;
  how.fresh_prefix = spec.fresh_prefix;
  if (d.spin > 0 && !spec.fresh.empty() && splices.size() > 1)
    fail_precondition(spec.what + ": new components need the central site when spin > 0");
  FrontDiagram out = transport(d, tr, apply_splices(d.events, splices), how);
  require_valid(out);
  return out;
}

FrontDiagram apply_local(const FrontDiagram& d, const MoveSite& site, int width, const std::vector<Event>& from,
                         const std::vector<Event>& to, const std::string& what) {
  RewriteSpec spec;
  spec.site = site;
  spec.width = width;
  spec.from = from;
  spec.to = to;
  spec.what = what;
  return apply_rewrite(d, spec);
}

ComponentId owner_at(const Trace& tr, int t, int s) {
  if (!tr.contains({t, s})) return 0;
  return tr.owner({t, s});
}

void require_component(const FrontDiagram& d, ComponentId c, const std::string& what) {
  if (c < 1 || c > d.component_count()) fail_precondition(what + ": no component " + std::to_string(c));
}

bool has_nodes(const ComponentAttr& a) { return a.node_plus || a.node_minus; }

// Sequence of commutations with attribute transport; spin is ignored so the
// intermediate words need not be palindromic.
FrontDiagram apply_swaps_raw(const FrontDiagram& d, const std::vector<int>& swaps) {
  FrontDiagram cur = d;
  const int spin = d.spin;
  cur.spin = 0;
  for (int k : swaps) {
    auto r = commute(cur.events[static_cast<std::size_t>(k)], cur.events[static_cast<std::size_t>(k + 1)]);
    if (!r) throw Error(ErrorKind::Assertion, "internal: non-commuting swap");
    Trace tr(cur);
    Transport how;
    how.links = splice_links(tr, {{k, k + 2, {r->first, r->second}}});
    cur = transport(cur, tr, apply_splices(cur.events, {{k, k + 2, {r->first, r->second}}}), how);
  }
  cur.spin = spin;
  return cur;
}

const std::vector<Event> kMinusUp = parse_word("X1 R2 L2 X1");
const std::vector<Event> kMinusDown = parse_word("X2 R1 L1 X2");
const std::vector<Event> kPlusUp = parse_word("X1 X2 X1");
const std::vector<Event> kPlusDown = parse_word("X2 X1 X2");

const std::vector<Event>& slide_template(SlideVariant v) {
  switch (v) {
    case SlideVariant::MinusUp:
      return kMinusUp;
    case SlideVariant::MinusDown:
      return kMinusDown;
    case SlideVariant::PlusUp:
      return kPlusUp;
    case SlideVariant::PlusDown:
      return kPlusDown;
  }
  return kMinusUp;
}

bool slides_up(SlideVariant v) { return v == SlideVariant::MinusUp || v == SlideVariant::PlusUp; }
bool slides_minus(SlideVariant v) { return v == SlideVariant::MinusUp || v == SlideVariant::MinusDown; }

SlideVariant opposite(SlideVariant v) {
  switch (v) {
    case SlideVariant::MinusUp:
      return SlideVariant::MinusDown;
    case SlideVariant::MinusDown:
      return SlideVariant::MinusUp;
    case SlideVariant::PlusUp:
      return SlideVariant::PlusDown;
    case SlideVariant::PlusDown:
      return SlideVariant::PlusUp;
  }
  return v;
}

struct SlidePlan {
  PushOff push;
  int time = 0;   // insertion time in the doubled word
  int base = 0;   // band starts at slot base+1
};

SlidePlan plan_slide(const FrontDiagram& d, const Trace& tr, ComponentId moving, ComponentId over, SlideVariant v,
                     const MoveSite& at) {
  const std::string what = "handleslide";
  const int t = at.e0;
  const int s = at.s0;
  if (at.s1 != s + 1) fail_precondition(what + ": site must name two adjacent strands");
  if (t < 0 || t > event_total(d)) fail_precondition(what + ": site time outside the diagram");
  const bool up = slides_up(v);
  const ComponentId lower = owner_at(tr, t, s), upper = owner_at(tr, t, s + 1);
  if (up && !(lower == moving && upper == over))
    fail_precondition(what + ": position mismatch, '" + d.attr(moving).label + "' must lie directly below '" +
                      d.attr(over).label + "' at the site");
  if (!up && !(lower == over && upper == moving))
    fail_precondition(what + ": position mismatch, '" + d.attr(moving).label + "' must lie directly above '" +
                      d.attr(over).label + "' at the site");
  if (d.spin > 0 && 2 * t != event_total(d))
    fail_precondition(what + ": with spin > 0 the slide must happen on the symmetry axis");
  SlidePlan plan;
  plan.push = push_off(tr, d.events, over, up, d.spin > 0);
  plan.time = plan.push.time_map[static_cast<std::size_t>(t)];
  const int over_slot = plan.push.slot_map[static_cast<std::size_t>(t)][static_cast<std::size_t>(up ? s : s - 1)];
  plan.base = over_slot - 2;
  return plan;
}

FrontDiagram forward_slide(const FrontDiagram& d, ComponentId moving, ComponentId over, SlideVariant v,
                           const MoveSite& at) {
  Trace tr(d);
  SlidePlan plan = plan_slide(d, tr, moving, over, v, at);
  Transport how;
  how.links = plan.push.links;
  ComponentAttr copy;
  copy.label = fresh_label(d.components, "pushoff");
  how.fresh.push_back({plan.push.added.front(), copy});
  FrontDiagram doubled = transport(d, tr, plan.push.events, how);
  Trace dt(doubled);
  const int moving_slot = slides_up(v) ? plan.base + 1 : plan.base + 3;
  RewriteSpec spec;
  spec.site = {plan.time, plan.time, plan.base + 1, plan.base + 3, {}};
  spec.width = 3;
  spec.to = slide_template(v);
  spec.what = "handleslide";
  spec.primary = dt.owner({plan.time, moving_slot});
  FrontDiagram out = apply_rewrite(doubled, spec);
  const std::string label = d.attr(moving).label;
  ComponentId slid = out.require_label(label);
  if (slides_minus(v) && has_nodes(d.attr(moving))) {
    auto& links = out.attr(slid).dashed_links;
    ComponentId target = out.require_label(d.attr(over).label);
    if (std::find(links.begin(), links.end(), target) == links.end()) {
      links.push_back(target);
      std::sort(links.begin(), links.end());
    }
  }
  require_valid(out);
  return out;
}

FrontDiagram undo_slide(const FrontDiagram& d, ComponentId moving, ComponentId over, SlideVariant v,
                        const MoveSite& at) {
  const std::string what = "handleslide (undo)";
  const SlideVariant done = opposite(v);
  const std::vector<Event>& pattern = slide_template(done);
  const int n = event_total(d);
  if (at.e1 - at.e0 != static_cast<int>(pattern.size()) || at.e0 < 0 || at.e1 > n || at.s1 != at.s0 + 2)
    fail_precondition(what + ": site must cover the " + std::to_string(pattern.size()) +
                      "-event slide pattern on three strands");
  if (d.spin > 0 && at.e0 + at.e1 != n) fail_precondition(what + ": with spin > 0 the site must be on the axis");
  const std::vector<Event> lhs = shifted(pattern, at.s0 - 1);
  if (!std::equal(lhs.begin(), lhs.end(), d.events.begin() + at.e0))
    fail_precondition(what + ": template mismatch at events " + range_text(at.e0, at.e1));
  Trace tr(d);
  const bool up = slides_up(done);
  const int k_slot = up ? at.s0 : at.s0 + 2;
  const int p_slot = up ? at.s0 + 2 : at.s0;
  if (owner_at(tr, at.e0, at.s0 + 1) != over || owner_at(tr, at.e0, k_slot) != moving ||
      owner_at(tr, at.e0, p_slot) != moving)
    fail_precondition(what + ": the pattern does not join '" + d.attr(moving).label + "' around '" +
                      d.attr(over).label + "'");
  // Cut the band, then drop the detached push-off.
  std::vector<Splice> cut{{at.e0, at.e1, {}}};
  std::vector<Event> cut_events = apply_splices(d.events, cut);
  Trace ct(d.left_count, cut_events);
  const ComponentId pid = ct.owner({at.e0, p_slot});
  if (pid == ct.owner({at.e0, k_slot})) fail_precondition(what + ": cutting the band does not detach a push-off");
  Rebuilt del = delete_components(ct, cut_events, {pid});
  std::map<Node, Node> after_delete(del.links.begin(), del.links.end());
  Transport how;
  for (const auto& [from, mid] : splice_links(tr, cut)) {
    auto it = after_delete.find(mid);
    if (it != after_delete.end()) how.links.push_back({from, it->second});
  }
  FrontDiagram out = transport(d, tr, del.events, how);
  require_valid(out);
  // The removed strand must be exactly the push-off the forward slide adds.
  Trace ot(out);
  Node k_img{}, y_img{};
  for (const auto& [from, to] : how.links) {
    if (from == Node{at.e0, k_slot}) k_img = to;
    if (from == Node{at.e0, at.s0 + 1}) y_img = to;
  }
  MoveSite redo{k_img.time, k_img.time, std::min(k_img.slot, y_img.slot), std::min(k_img.slot, y_img.slot) + 1, {}};
  FrontDiagram again = forward_slide(out, ot.owner(k_img), ot.owner(y_img), done, redo);
  if (canonical_word(again.events) != canonical_word(d.events))
    fail_precondition(what + ": the strand beyond '" + d.attr(over).label + "' is not its push-off");
  return out;
}

const LocalRule kClasp{"clasp", 2, {}, parse_word("X1 X1")};
const LocalRule kStabilize{"stabilize", 1, {}, parse_word("L1 R2 L2 R1")};
const LocalRule kCrossingChange{"crossing-change", 2, parse_word("X1"), parse_word("L1 R2 L3 X2 R1")};

const std::vector<LocalRule>& r1_rules() {
  static const std::vector<LocalRule> rules{
      {"up", 1, {}, parse_word("L2 X1 R2")},
      {"down", 1, {}, parse_word("L1 X2 R1")},
  };
  return rules;
}

const std::vector<LocalRule>& r2_rules() {
  static const std::vector<LocalRule> rules{
      {"left-below", 1, parse_word("L2"), parse_word("L1 X2 X1")},
      {"left-above", 1, parse_word("L1"), parse_word("L2 X1 X2")},
      {"right-below", 3, parse_word("R2"), parse_word("X1 X2 R1")},
      {"right-above", 3, parse_word("R1"), parse_word("X2 X1 R2")},
  };
  return rules;
}

const std::vector<LocalRule>& r3_rules() {
  static const std::vector<LocalRule> rules{{"braid", 3, parse_word("X1 X2 X1"), parse_word("X2 X1 X2")}};
  return rules;
}

const std::vector<LocalRule>& rules_for(ReidemeisterMove m) {
  switch (m) {
    case ReidemeisterMove::R1:
      return r1_rules();
    case ReidemeisterMove::R2:
      return r2_rules();
    case ReidemeisterMove::R3:
      return r3_rules();
  }
  return r1_rules();
}

const char* move_name(ReidemeisterMove m) {
  switch (m) {
    case ReidemeisterMove::R1:
      return "R1";
    case ReidemeisterMove::R2:
      return "R2";
    case ReidemeisterMove::R3:
      return "R3";
  }
  return "R?";
}

int parse_number(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::Parse, "bad site '" + std::string(whole) + "'");
  return v;
}

std::pair<int, int> parse_range(std::string_view s, std::string_view whole) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    int v = parse_number(s, whole);
    return {v, v};
  }
  return {parse_number(s.substr(0, dots), whole), parse_number(s.substr(dots + 2), whole)};
}

}  // namespace

MoveSite parse_site(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(ErrorKind::Parse, "bad site '" + std::string(text) + "'");
  MoveSite site;
  std::tie(site.e0, site.e1) = parse_range(text.substr(0, slash), text);
  std::tie(site.s0, site.s1) = parse_range(text.substr(slash + 1), text);
  return site;
}

std::string to_string(const MoveSite& site) {
  return range_text(site.e0, site.e1) + "/" + range_text(site.s0, site.s1);
}

const LocalRule& clasp_rule() { return kClasp; }
const LocalRule& stabilize_rule() { return kStabilize; }
const LocalRule& crossing_change_rule() { return kCrossingChange; }

const LocalRule& reidemeister_rule(ReidemeisterMove move, std::string_view variant) {
  for (const LocalRule& r : rules_for(move))
    if (r.name == variant) return r;
  fail_precondition(std::string("unknown ") + move_name(move) + " variant '" + std::string(variant) + "'");
}

std::vector<std::string> reidemeister_variants(ReidemeisterMove move) {
  std::vector<std::string> out;
  for (const LocalRule& r : rules_for(move)) out.push_back(r.name);
  return out;
}

const std::vector<LocalRule>& reduction_rules() {
  static const std::vector<LocalRule> rules = [] {
    std::vector<LocalRule> all = r1_rules();
    for (const LocalRule& r : r2_rules()) all.push_back(r);
    return all;
  }();
  return rules;
}

FrontDiagram rewrite_site(const FrontDiagram& d, const MoveSite& site, int width, const std::vector<Event>& from,
                          const std::vector<Event>& to, const std::string& what) {
  return apply_local(d, site, width, from, to, what);
}

FrontDiagram commute_at(const FrontDiagram& d, int j) {
  const int n = event_total(d);
  if (j < 0 || j + 1 >= n) fail_precondition("commute: no event pair at " + std::to_string(j));
  auto r = commute(d.events[static_cast<std::size_t>(j)], d.events[static_cast<std::size_t>(j + 1)]);
  if (!r) fail_precondition("commute: events " + std::to_string(j) + " and " + std::to_string(j + 1) + " interact");
  std::vector<Splice> splices{{j, j + 2, {r->first, r->second}}};
  if (d.spin > 0) {
    const int m = n - 2 - j;
    const std::vector<Event> mirrored = mirror(splices[0].replacement);
    if (m == j) {
      if (mirrored != splices[0].replacement)
        fail_precondition("commute: spin-symmetry conflict on the axis");
    } else if (std::abs(m - j) < 2) {
      fail_precondition("commute: spin-symmetry conflict, the pair overlaps its mirror");
    } else {
      splices.push_back({m, m + 2, mirrored});
      std::sort(splices.begin(), splices.end(), [](const Splice& a, const Splice& b) { return a.begin < b.begin; });
    }
  }
  Trace tr(d);
  Transport how;
  how.links = splice_links(tr, splices);
  FrontDiagram out = transport(d, tr, apply_splices(d.events, splices), how);
  require_valid(out);
  return out;
}

FrontDiagram uplus(const FrontDiagram& d, ComponentId a, ComponentId b, const MoveSite& at) {
  require_component(d, a, "uplus");
  require_component(d, b, "uplus");
  if (a == b) fail_precondition("uplus needs two distinct components");
  if (at.e1 != at.e0 || at.s1 != at.s0 + 1)
    fail_precondition("uplus: site must be two adjacent strands at a single time");
  if (d.spin > 0 && 2 * at.e0 != event_total(d))
    fail_precondition("uplus: with spin > 0 the site must be on the symmetry axis");
  Trace tr(d);
  const ComponentId lower = owner_at(tr, at.e0, at.s0), upper = owner_at(tr, at.e0, at.s1);
  RewriteSpec spec;
  spec.site = at;
  spec.width = 2;
  spec.what = "uplus";
  spec.primary = a;
  if (lower == a && upper == b) spec.to = parse_word("R1 L1");
  else if (lower == b && upper == a) spec.to = parse_word("X1");
  else fail_precondition("uplus: the strands at the site are not adjacent strands of the two components");
  return apply_rewrite(d, spec);
}

FrontDiagram handleslide(const FrontDiagram& d, ComponentId moving, ComponentId over, SlideVariant variant,
                         const MoveSite& at) {
  require_component(d, moving, "handleslide");
  require_component(d, over, "handleslide");
  if (moving == over) fail_precondition("handleslide: a component cannot slide over itself");
  const Coefficient need = slides_minus(variant) ? Coefficient::Minus : Coefficient::Plus;
  if (d.attr(over).coefficient != need)
    fail_precondition("handleslide: coefficient mismatch, '" + d.attr(over).label + "' must carry " +
                      coefficient_text(need));
  if (at.e1 > at.e0) return undo_slide(d, moving, over, variant, at);
  return forward_slide(d, moving, over, variant, at);
}

MoveSite slide_pattern_site(const FrontDiagram& before, ComponentId moving, ComponentId over, SlideVariant variant,
                            const MoveSite& at) {
  Trace tr(before);
  SlidePlan plan = plan_slide(before, tr, moving, over, variant, at);
  const int len = static_cast<int>(slide_template(variant).size());
  return {plan.time, plan.time + len, plan.base + 1, plan.base + 3, {}};
}

FrontDiagram clasp(const FrontDiagram& d, const MoveSite& site, ClaspDirection direction) {
  const LocalRule& r = clasp_rule();
  if (direction == ClaspDirection::Clasp) return apply_local(d, site, r.width, r.simple, r.expanded, "clasp");
  return apply_local(d, site, r.width, r.expanded, r.simple, "unclasp");
}

FrontDiagram stabilize(const FrontDiagram& d, ComponentId c, const MoveSite& site, StabilizeDirection direction) {
  require_component(d, c, "stabilize");
  Trace tr(d);
  if (owner_at(tr, site.e0, site.s0) != c)
    fail_precondition("stabilize: the strand at the site does not belong to '" + d.attr(c).label + "'");
  const LocalRule& r = stabilize_rule();
  if (direction == StabilizeDirection::Stabilize)
    return apply_local(d, site, r.width, r.simple, r.expanded, "stabilize");
  return apply_local(d, site, r.width, r.expanded, r.simple, "destabilize");
}

FrontDiagram crossing_change(const FrontDiagram& d, const MoveSite& site) {
  if (d.spin != 0) fail_precondition("crossing change is only defined for spin 0");
  const LocalRule& r = crossing_change_rule();
  if (site.e1 - site.e0 == static_cast<int>(r.simple.size()))
    return apply_local(d, site, r.width, r.simple, r.expanded, "crossing change");
  return apply_local(d, site, r.width, r.expanded, r.simple, "crossing change");
}

FrontDiagram reidemeister(const FrontDiagram& d, ReidemeisterMove move, std::string_view variant,
                          RewriteDirection direction, const MoveSite& site) {
  const LocalRule& r = reidemeister_rule(move, variant);
  const std::string what = std::string(move_name(move)) + " " + r.name;
  if (move == ReidemeisterMove::R3) {
    Trace tr(d);
    for (int s = site.s0; s <= site.s1; ++s) {
      ComponentId c = owner_at(tr, site.e0, s);
      if (c != 0 && has_nodes(d.attr(c)))
        fail_precondition(what + ": refused, strand of node-decorated component '" + d.attr(c).label + "'");
    }
  }
  if (direction == RewriteDirection::Insert) return apply_local(d, site, r.width, r.simple, r.expanded, what);
  return apply_local(d, site, r.width, r.expanded, r.simple, what);
}

FrontDiagram birth_cancel_pair(const FrontDiagram& d, const MoveSite& site, BirthDirection direction) {
  if (direction == BirthDirection::Birth) {
    if (site.e1 != site.e0) fail_precondition("birth: the site must be a single time");
    if (d.spin > 0 && 2 * site.e0 != event_total(d))
      fail_precondition("birth: with spin > 0 the site must be on the symmetry axis");
    RewriteSpec spec;
    spec.site = {site.e0, site.e0, site.s0, site.s0 - 1, {}};
    spec.width = 0;
    spec.to = parse_word("L1 L2 X1 X1 R2 R1");
    spec.what = "birth";
    ComponentAttr plus;
    plus.coefficient = Coefficient::Plus;
    plus.label = fresh_label(d.components, "U");
    ComponentAttr minus;
    minus.coefficient = Coefficient::Minus;
    minus.label = fresh_label(d.components, "Y");
    spec.fresh.push_back({{site.e0 + 1, site.s0}, plus});
    spec.fresh.push_back({{site.e0 + 2, site.s0 + 1}, minus});
    return apply_rewrite(d, spec);
  }
  if (site.refs.size() != 2) fail_precondition("cancel: name the (+1) unknot and its (-1) partner");
  const ComponentId plus = site.refs[0], minus = site.refs[1];
  require_component(d, plus, "cancel");
  require_component(d, minus, "cancel");
  const ComponentAttr& pa = d.attr(plus);
  const ComponentAttr& ma = d.attr(minus);
  if (pa.coefficient != Coefficient::Plus || has_nodes(pa))
    fail_precondition("cancel: '" + pa.label + "' is not an undecorated (+1) component");
  if (ma.coefficient != Coefficient::Minus) fail_precondition("cancel: '" + ma.label + "' is not a (-1) component");
  CrossingData cd(d);
  if (cd.self_crossings(plus) != 0) fail_precondition("cancel: '" + pa.label + "' is not a crossingless unknot");
  for (ComponentId c = 1; c <= d.component_count(); ++c)
    if (c != plus && c != minus && cd.crossings_between(plus, c) != 0)
      fail_precondition("cancel: '" + d.attr(c).label + "' also passes '" + pa.label + "'");
  const int passes = cd.crossings_between(plus, minus);
  const int signed_sum = cd.signed_crossings(plus, minus);
  if (passes != 2 || std::abs(signed_sum) != 2)
    fail_precondition("cancel: geometric linking of '" + ma.label + "' with '" + pa.label + "' is not 1 (" +
                      std::to_string(passes) + " crossings, signed sum " + std::to_string(signed_sum) + ")");
  Trace tr = cd.trace();
  Rebuilt del = delete_components(tr, d.events, {plus, minus});
  Transport how;
  how.links = del.links;
  how.may_drop = {plus, minus};
  FrontDiagram out = transport(d, tr, del.events, how);
  require_valid(out);
  return out;
}

FrontDiagram add_push_off(const FrontDiagram& d, ComponentId c, bool above, const ComponentAttr& attr) {
  require_component(d, c, "push-off");
  Trace tr(d);
  PushOff po = push_off(tr, d.events, c, above, d.spin > 0);
  Transport how;
  how.links = po.links;
  how.fresh.push_back({po.added.front(), attr});
  FrontDiagram out = transport(d, tr, po.events, how);
  require_valid(out);
  return out;
}

TrivialBypassKind classify_trivial_bypass(const FrontDiagram& d, ComponentId n_handle, ComponentId np1_handle) {
  require_component(d, n_handle, "trivial bypass");
  require_component(d, np1_handle, "trivial bypass");
  if (n_handle == np1_handle) fail_precondition("trivial bypass: the two handles must differ");
  const ComponentAttr& na = d.attr(n_handle);
  const ComponentAttr& pa = d.attr(np1_handle);
  if (na.coefficient != Coefficient::Minus)
    fail_precondition("trivial bypass: '" + na.label + "' must carry a (-1) coefficient");
  if (pa.coefficient != Coefficient::Plus || !pa.node_plus || !pa.node_minus)
    fail_precondition("trivial bypass: '" + pa.label +
                      "' violates the (n+1)-handle convention: (+1) coefficient with both (+) and (-) nodes");
  if (std::find(pa.dashed_links.begin(), pa.dashed_links.end(), n_handle) == pa.dashed_links.end())
    fail_precondition("trivial bypass: '" + pa.label + "' has no dashed link to '" + na.label + "'");
  Trace tr(d);
  Rebuilt without = delete_components(tr, d.events, {np1_handle});
  Transport how;
  how.links = without.links;
  how.may_drop = {np1_handle};
  FrontDiagram rest = transport(d, tr, without.events, how);
  ComponentAttr copy = pa;
  copy.dashed_links.clear();
  // Above and below give the same unlabeled word; the labels tell which strand is the copy.
  auto labelled = [](const FrontDiagram& x) {
    FrontDiagram c = canonical_form(x);
    std::vector<std::string> labels;
    for (const ComponentAttr& a : c.components) labels.push_back(a.label);
    return std::pair{c.events, labels};
  };
  const auto target = labelled(d);
  for (bool above : {true, false}) {
    FrontDiagram candidate = add_push_off(rest, rest.require_label(na.label), above, copy);
    if (labelled(candidate) == target) return above ? TrivialBypassKind::TB1 : TrivialBypassKind::TB2;
  }
  fail_precondition("trivial bypass: pattern mismatch, '" + pa.label + "' is neither the upward (TB1) nor the "
                    "downward (TB2) Reeb push-off of '" + na.label + "'");
}

FrontDiagram cancel_trivial_bypass(const FrontDiagram& d, ComponentId n_handle, ComponentId np1_handle) {
  classify_trivial_bypass(d, n_handle, np1_handle);
  Trace tr(d);
  Rebuilt del = delete_components(tr, d.events, {n_handle, np1_handle});
  Transport how;
  how.links = del.links;
  how.may_drop = {n_handle, np1_handle};
  FrontDiagram out = transport(d, tr, del.events, how);
  require_valid(out);
  return out;
}

FrontDiagram normalize(const FrontDiagram& d) {
  FrontDiagram cur = d;
  while (true) {
    const int n = event_total(cur);
    bool changed = false;
    for (int i = 0; i < n && !changed; ++i) {
      for (const LocalRule& rule : reduction_rules()) {
        if (cur.events[static_cast<std::size_t>(i)].kind != rule.expanded.front().kind) continue;
        auto g = gather(cur.events, i, rule.expanded, n);
        if (!g) continue;
        const int len = static_cast<int>(rule.expanded.size());
        if (cur.spin > 0) {
          // Swaps and the block must stay left of their mirror images, or the block sits on the axis.
          const bool swaps_ok =
              std::all_of(g->swaps.begin(), g->swaps.end(), [&](int k) { return 2 * (k + 2) <= n; });
          const bool block_ok = 2 * (g->at + len) <= n || 2 * g->at + len == n;
          if (!swaps_ok || !block_ok) continue;
        }
        const std::vector<int> counts = strand_counts(cur.left_count, g->word);
        if (g->base + rule.width > counts[static_cast<std::size_t>(g->at)]) continue;
        FrontDiagram next = cur;
        for (int k : g->swaps) next = commute_at(next, k);
        next = apply_local(next, {g->at, g->at + len, g->base + 1, g->base + rule.width, {}}, rule.width,
                           rule.expanded, rule.simple, "normalize");
        cur = std::move(next);
        changed = true;
        break;
      }
    }
    if (!changed) return cur;
  }
}

FrontDiagram canonical_form(const FrontDiagram& d) { return apply_swaps_raw(d, canonical_swaps(d.events)); }

bool equivalent_up_to_normalization(const FrontDiagram& a, const FrontDiagram& b) {
  if (a.spin != b.spin || a.left_count != b.left_count || a.right_count() != b.right_count()) return false;
  if (a.component_count() != b.component_count()) return false;
  if (a.spin == 0 && a.closed() && b.closed()) {
    auto signature = [](const FrontDiagram& d) {
      std::multiset<std::pair<int, int>> out;
      for (ComponentId c = 1; c <= d.component_count(); ++c) {
        ClassicalInvariants ci = classical_invariants(d, c);
        out.insert({ci.tb, ci.rot});
      }
      return out;
    };
    if (signature(a) != signature(b)) return false;
  }
  FrontDiagram na = canonical_form(normalize(a));
  FrontDiagram nb = canonical_form(normalize(b));
  if (na.events != nb.events || na.component_count() != nb.component_count()) return false;
  for (ComponentId c = 1; c <= na.component_count(); ++c) {
    ComponentAttr x = na.attr(c), y = nb.attr(c);
    x.label.clear();
    y.label.clear();
    if (!(x == y)) return false;
  }
  return true;
}

}  // namespace fk
