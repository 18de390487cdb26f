#pragma once

#include <compare>
#include <vector>

#include "frontkit/diagram.hpp"

namespace fk {

// The strand segment at `slot` between event time-1 and event time.
struct Node {
  int time = 0;
  int slot = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct ComponentPath {
  bool closed = false;
  std::vector<Node> nodes;  // canonical traversal order
};

// Component decomposition of an event word. Closed components start at their
// lowest segment at the first time they exist and run rightward; open ones
// start at the wall end with the smaller (time, slot).
class Trace {
 public:
  Trace(int left_count, const std::vector<Event>& events);
  explicit Trace(const FrontDiagram& d) : Trace(d.left_count, d.events) {}

  int event_count() const { return static_cast<int>(counts_.size()) - 1; }
  int count(int time) const { return counts_[static_cast<std::size_t>(time)]; }
  const std::vector<int>& counts() const { return counts_; }
  int component_count() const { return static_cast<int>(paths_.size()); }
  const std::vector<ComponentPath>& paths() const { return paths_; }
  const ComponentPath& path(ComponentId c) const { return paths_[static_cast<std::size_t>(c - 1)]; }

  bool contains(Node n) const;
  ComponentId owner(Node n) const { return owner_[index(n)]; }
  // +1 when the canonical traversal crosses the segment rightward, -1 leftward.
  int direction(Node n) const { return dir_[index(n)]; }

  // Components touched by event j.
  std::vector<ComponentId> event_components(int j) const;

 private:
  std::size_t index(Node n) const { return offset_[static_cast<std::size_t>(n.time)] + static_cast<std::size_t>(n.slot - 1); }

  std::vector<Event> events_;
  std::vector<int> counts_;
  std::vector<std::size_t> offset_;
  std::vector<ComponentId> owner_;
  std::vector<signed char> dir_;
  std::vector<ComponentPath> paths_;
};

// Component paths keyed by ComponentId (index 0 is ComponentId 1).
std::vector<ComponentPath> trace_components(const FrontDiagram& d);

// Where the strand at `slot` before event e sits after it, or 0 if it ends in a cusp.
int slot_after(const Event& e, int slot);
// Where the strand at `slot` after event e sat before it, or 0 if it starts at a cusp.
int slot_before(const Event& e, int slot);

}  // namespace fk
