#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fk {

enum class EventKind : std::uint8_t { LeftCusp, RightCusp, Crossing };

// One Morse event of a front read left to right. Slots are 1-based from the
// bottom: LeftCusp p creates a pair at p, p+1; RightCusp p joins p, p+1;
// Crossing p swaps p and p+1.
struct Event {
  EventKind kind = EventKind::Crossing;
  int position = 1;
  friend bool operator==(const Event&, const Event&) = default;
};

constexpr Event left_cusp(int p) { return {EventKind::LeftCusp, p}; }
constexpr Event right_cusp(int p) { return {EventKind::RightCusp, p}; }
constexpr Event crossing(int p) { return {EventKind::Crossing, p}; }

// Change in strand count caused by an event.
constexpr int strand_delta(EventKind k) {
  return k == EventKind::LeftCusp ? 2 : k == EventKind::RightCusp ? -2 : 0;
}

char event_letter(EventKind k);
std::string to_string(const Event& e);
std::string to_string(const std::vector<Event>& word);

// Parses a compact word such as "L1 L2 X1 R2 R1" (used by tests and scenarios).
std::vector<Event> parse_word(std::string_view text);

// Mirror across the vertical axis: reverse, swap cusp kinds, keep positions.
Event mirror(const Event& e);
std::vector<Event> mirror(const std::vector<Event>& word);

enum class Coefficient : std::uint8_t { None, Plus, Minus };
enum class Orientation : std::uint8_t { Forward, Backward };

// Components are numbered 1..N in canonical trace order.
using ComponentId = int;

struct ComponentAttr {
  Coefficient coefficient = Coefficient::None;
  bool node_plus = false;
  bool node_minus = false;
  std::vector<ComponentId> dashed_links;  // sorted, unique
  Orientation orientation = Orientation::Forward;
  std::string label;

  // Plus coefficient with both nodes: a contact (n+1)-handle.
  bool top_handle() const { return coefficient == Coefficient::Plus && node_plus && node_minus; }
  friend bool operator==(const ComponentAttr&, const ComponentAttr&) = default;
};

struct FrontDiagram {
  std::string name = "front";
  int spin = 0;
  int left_count = 0;
  std::vector<Event> events;
  std::vector<ComponentAttr> components;  // components[i] belongs to ComponentId i+1

  int right_count() const;
  bool closed() const { return left_count == 0 && right_count() == 0; }
  int component_count() const { return static_cast<int>(components.size()); }
  const ComponentAttr& attr(ComponentId c) const;
  ComponentAttr& attr(ComponentId c);
  std::optional<ComponentId> find_label(std::string_view label) const;
  ComponentId require_label(std::string_view label) const;

  friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

// Strand counts at times 0..N, or the message for the first invalid event.
struct Replay {
  std::vector<int> counts;
  std::optional<std::string> error;
};
Replay replay(int left_count, const std::vector<Event>& events);

// Count after every event; throws fk::Error on an invalid word.
std::vector<int> strand_counts(int left_count, const std::vector<Event>& events);

const char* coefficient_text(Coefficient c);

}  // namespace fk
