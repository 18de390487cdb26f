#include "frontkit/transport.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "frontkit/error.hpp"

namespace fk {

std::string fresh_label(const std::vector<ComponentAttr>& taken, const std::string& prefix) {
  for (int i = 1;; ++i) {
    std::string candidate = prefix + std::to_string(i);
    bool used = std::any_of(taken.begin(), taken.end(),
                            [&](const ComponentAttr& a) { return a.label == candidate; });
    if (!used) return candidate;
  }
}

ComponentAttr merge_attrs(const ComponentAttr& a, const ComponentAttr& b) {
  if (a.coefficient != Coefficient::None && b.coefficient != Coefficient::None)
    fail_precondition("coefficient conflict: both '" + a.label + "' and '" + b.label +
                      "' carry surgery coefficients");
  ComponentAttr m = a;
  if (m.coefficient == Coefficient::None) m.coefficient = b.coefficient;
  m.node_plus = a.node_plus || b.node_plus;
  m.node_minus = a.node_minus || b.node_minus;
  m.dashed_links.insert(m.dashed_links.end(), b.dashed_links.begin(), b.dashed_links.end());
  return m;
}

std::vector<Event> apply_splices(const std::vector<Event>& events, const std::vector<Splice>& splices) {
  std::vector<Event> out;
  int cursor = 0;
  for (const Splice& s : splices) {
    out.insert(out.end(), events.begin() + cursor, events.begin() + s.begin);
    out.insert(out.end(), s.replacement.begin(), s.replacement.end());
    cursor = s.end;
  }
  out.insert(out.end(), events.begin() + cursor, events.end());
  return out;
}

std::vector<std::pair<Node, Node>> splice_links(const Trace& old_trace, const std::vector<Splice>& splices) {
  std::vector<std::pair<Node, Node>> links;
  const int last = old_trace.event_count();
  for (int t = 0; t <= last; ++t) {
    int shift = 0;
    bool interior = false;
    for (const Splice& s : splices) {
      if (t > s.begin && t < s.end) interior = true;
      if (t >= s.end) shift += static_cast<int>(s.replacement.size()) - (s.end - s.begin);
    }
    if (interior) continue;
    for (int slot = 1; slot <= old_trace.count(t); ++slot) links.push_back({{t, slot}, {t + shift, slot}});
  }
  return links;
}

FrontDiagram transport(const FrontDiagram& old, const Trace& old_trace, std::vector<Event> events,
                       const Transport& how) {
  FrontDiagram out;
  out.name = old.name;
  out.spin = old.spin;
  out.left_count = how.flip_x ? old.right_count() : old.left_count;
  out.events = std::move(events);
  Trace next(out.left_count, out.events);

  const int old_n = old_trace.component_count();
  const int new_n = next.component_count();
  std::vector<ComponentId> image(static_cast<std::size_t>(old_n + 1), 0);
  std::vector<Node> witness_old(static_cast<std::size_t>(old_n + 1));
  std::vector<Node> witness_new(static_cast<std::size_t>(old_n + 1));
  for (const auto& [from, to] : how.links) {
    if (!old_trace.contains(from) || !next.contains(to)) throw Error(ErrorKind::Validation, "transport link out of range");
    ComponentId oc = old_trace.owner(from);
    ComponentId nc = next.owner(to);
    auto& slot = image[static_cast<std::size_t>(oc)];
    if (slot == 0) {
      slot = nc;
      witness_old[static_cast<std::size_t>(oc)] = from;
      witness_new[static_cast<std::size_t>(oc)] = to;
    } else if (slot != nc) {
      throw Error(ErrorKind::Precondition, "rewrite splits component '" + old.attr(oc).label + "'");
    }
  }

  std::map<ComponentId, std::vector<ComponentId>> sources;
  for (ComponentId oc = 1; oc <= old_n; ++oc) {
    ComponentId nc = image[static_cast<std::size_t>(oc)];
    if (nc == 0) {
      if (std::find(how.may_drop.begin(), how.may_drop.end(), oc) == how.may_drop.end())
        throw Error(ErrorKind::Precondition, "rewrite loses component '" + old.attr(oc).label + "'");
      continue;
    }
    sources[nc].push_back(oc);
  }

  auto desired_dir = [&](ComponentId oc) {
    int d = old_trace.direction(witness_old[static_cast<std::size_t>(oc)]);
    if (old.attr(oc).orientation == Orientation::Backward) d = -d;
    return how.flip_x ? -d : d;
  };

  out.components.assign(static_cast<std::size_t>(new_n), ComponentAttr{});
  std::vector<bool> assigned(static_cast<std::size_t>(new_n + 1), false);
  for (auto& [nc, olds] : sources) {
    ComponentId lead = olds.front();
    if (how.primary && std::find(olds.begin(), olds.end(), *how.primary) != olds.end()) lead = *how.primary;
    ComponentAttr a = old.attr(lead);
    for (ComponentId oc : olds)
      if (oc != lead) a = merge_attrs(a, old.attr(oc));
    int want = desired_dir(lead);
    int have = next.direction(witness_new[static_cast<std::size_t>(lead)]);
    a.orientation = want == have ? Orientation::Forward : Orientation::Backward;
    // Dashed targets are renumbered after all components are placed.
    std::vector<ComponentId> targets;
    for (ComponentId t : a.dashed_links)
      if (t >= 1 && t <= old_n && image[static_cast<std::size_t>(t)] != 0)
        targets.push_back(image[static_cast<std::size_t>(t)]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    targets.erase(std::remove(targets.begin(), targets.end(), nc), targets.end());
    a.dashed_links = targets;
    out.components[static_cast<std::size_t>(nc - 1)] = a;
    assigned[static_cast<std::size_t>(nc)] = true;
  }
  for (const auto& [node, spec] : how.fresh) {
    ComponentId nc = next.owner(node);
    if (assigned[static_cast<std::size_t>(nc)]) throw Error(ErrorKind::Validation, "fresh attribute on an existing component");
    ComponentAttr a = spec;
    a.orientation = Orientation::Forward;
    out.components[static_cast<std::size_t>(nc - 1)] = a;
    assigned[static_cast<std::size_t>(nc)] = true;
  }
  for (ComponentId nc = 1; nc <= new_n; ++nc) {
    if (assigned[static_cast<std::size_t>(nc)]) continue;
    out.components[static_cast<std::size_t>(nc - 1)].label = fresh_label(out.components, how.fresh_prefix);
    assigned[static_cast<std::size_t>(nc)] = true;
  }
  for (auto& a : out.components)
    if (a.label.empty()) a.label = fresh_label(out.components, how.fresh_prefix);
  return out;
}

}  // namespace fk
