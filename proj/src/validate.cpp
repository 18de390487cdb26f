#include "frontkit/validate.hpp"

#include <set>

#include "frontkit/error.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/transport.hpp"

namespace fk {

bool check_spin_symmetry(const FrontDiagram& d) {
  return d.left_count == d.right_count() && mirror(d.events) == d.events;
}

std::vector<Violation> validate_diagram(const FrontDiagram& d) {
  std::vector<Violation> out;
  Replay rp = replay(d.left_count, d.events);
  if (rp.error) {
    out.push_back({"replay", *rp.error});
    return out;
  }
  if (d.spin < 0) out.push_back({"spin", "spin must be non-negative"});
  if (d.spin > 0 && !check_spin_symmetry(d))
    out.push_back({"spin-symmetry", "spin " + std::to_string(d.spin) + " diagram is not mirror-palindromic"});
  Trace tr(d);
  if (tr.component_count() != d.component_count()) {
    out.push_back({"components", "diagram traces " + std::to_string(tr.component_count()) +
                                     " components but lists " + std::to_string(d.component_count())});
    return out;
  }
  std::set<std::string> labels;
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    const ComponentAttr& a = d.attr(c);
    if (a.label.empty()) out.push_back({"labels", "component " + std::to_string(c) + " has no label"});
    else if (!labels.insert(a.label).second) out.push_back({"labels", "duplicate label '" + a.label + "'"});
    for (ComponentId t : a.dashed_links) {
      if (t < 1 || t > d.component_count()) {
        out.push_back({"dashed-target", "dashed link from '" + a.label + "' to a missing component"});
      } else if (d.attr(t).coefficient != Coefficient::Minus) {
        out.push_back({"dashed-target", "dashed link from '" + a.label + "' must point at a (-1) component, '" +
                                            d.attr(t).label + "' is not one"});
      } else if (t == c) {
        out.push_back({"dashed-target", "component '" + a.label + "' links to itself"});
      }
    }
  }
  return out;
}

void require_valid(const FrontDiagram& d) {
  auto v = validate_diagram(d);
  if (!v.empty()) throw Error(ErrorKind::Validation, v.front().message);
}

FrontDiagram mirror_diagram(const FrontDiagram& d) {
  Trace tr(d);
  const int last = static_cast<int>(d.events.size());
  Transport how;
  how.flip_x = true;
  for (int t = 0; t <= last; ++t)
    for (int s = 1; s <= tr.count(t); ++s) how.links.push_back({{t, s}, {last - t, s}});
  return transport(d, tr, mirror(d.events), how);
}

}  // namespace fk
