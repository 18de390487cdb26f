#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontkit/diagram.hpp"
#include "frontkit/trace.hpp"

namespace fk {

// Carries component attributes from an old word to a rewritten one through a
// list of corresponding segments.
struct Transport {
  std::vector<std::pair<Node, Node>> links;  // (old node, new node)
  bool flip_x = false;                       // new word is left-right mirrored
  std::vector<ComponentId> may_drop;         // old components allowed to disappear
  std::vector<std::pair<Node, ComponentAttr>> fresh;  // attrs for brand-new components
  std::optional<ComponentId> primary;        // merge winner for label/orientation
  std::string fresh_prefix = "c";
};

// Builds the new diagram from `events`; throws fk::Error on merge conflicts or
// components that vanish without permission.
FrontDiagram transport(const FrontDiagram& old, const Trace& old_trace, std::vector<Event> events,
                       const Transport& how);

// Links every segment at times outside the open interiors of the given
// replaced intervals; intervals are [begin, end) in old event indices with the
// replacement length, sorted and disjoint.
struct Splice {
  int begin = 0;
  int end = 0;
  std::vector<Event> replacement;
};
std::vector<std::pair<Node, Node>> splice_links(const Trace& old_trace, const std::vector<Splice>& splices);
std::vector<Event> apply_splices(const std::vector<Event>& events, const std::vector<Splice>& splices);

// Attribute merge used by uplus: union of decorations, at most one coefficient.
ComponentAttr merge_attrs(const ComponentAttr& a, const ComponentAttr& b);

// Default attributes for components listed nowhere, with labels c1, c2, ...
// that avoid existing ones.
std::string fresh_label(const std::vector<ComponentAttr>& taken, const std::string& prefix);

}  // namespace fk
