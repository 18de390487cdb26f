#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "frontkit/diagram.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/transport.hpp"

namespace fk {

// Planar isotopy of two adjacent events a,b: returns (b', a') when they act on
// disjoint parts of the front, with positions adjusted for the new order.
std::optional<std::pair<Event, Event>> commute(const Event& a, const Event& b);

// Representative of the commutation class: repeatedly emit the smallest event
// (by position, then kind) that can be moved to the front.
std::vector<Event> canonical_word(const std::vector<Event>& events);
// Adjacent exchanges (index k swaps k and k+1) turning `events` into its canonical word.
std::vector<int> canonical_swaps(const std::vector<Event>& events);
std::vector<Event> apply_swaps(std::vector<Event> events, const std::vector<int>& swaps);

// Tries to make a contiguous block equal to `pattern` shifted by a base
// offset, starting from word[start] and using commutations inside
// [start, limit) only. Foreign events may be pushed left of the block, so the
// block ends up at index `at` >= start.
struct Gathered {
  std::vector<Event> word;
  int at = 0;
  int base = 0;
  std::vector<int> swaps;  // the commutations performed, as for apply_swaps
};
std::optional<Gathered> gather(const std::vector<Event>& word, int start, const std::vector<Event>& pattern,
                               int limit);

// Result of rebuilding a word with some strands added or removed, plus the
// correspondence of surviving old segments.
struct Rebuilt {
  std::vector<Event> events;
  std::vector<std::pair<Node, Node>> links;
  std::vector<Node> added;  // one segment of each newly created component
};

// Removes every strand of the given components; events involving exactly one
// removed strand simply lose it.
Rebuilt delete_components(const Trace& tr, const std::vector<Event>& events, const std::set<ComponentId>& gone);

// Adds a Legendrian push-off of component c shifted up (above) or down. With
// `mirror_safe` the right half uses mirrored self-crossing orders so a
// palindromic word stays palindromic. The copy of old segment (t, s) of c sits
// at (time_map[t], slot_map[t][s-1] + copy_offset).
struct PushOff : Rebuilt {
  std::vector<int> time_map;                // old time -> new time
  std::vector<std::vector<int>> slot_map;   // [old t][old s-1] -> new slot
  int copy_offset = 1;                      // copy slot = original slot + offset
};
PushOff push_off(const Trace& tr, const std::vector<Event>& events, ComponentId c, bool above, bool mirror_safe);

// Reflection z -> -z of the front (top and bottom exchanged).
std::vector<Event> flip_vertical(int left_count, const std::vector<Event>& events);
FrontDiagram flip_vertical(const FrontDiagram& d);

}  // namespace fk
