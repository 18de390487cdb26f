#include "frontkit/diagram.hpp"

#include <algorithm>
#include <cctype>

#include "frontkit/error.hpp"

namespace fk {

char event_letter(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp:
      return 'L';
    case EventKind::RightCusp:
      return 'R';
    case EventKind::Crossing:
      return 'X';
  }
  return '?';
}

std::string to_string(const Event& e) { return event_letter(e.kind) + std::to_string(e.position); }

std::string to_string(const std::vector<Event>& word) {
  std::string out;
  for (const Event& e : word) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

std::vector<Event> parse_word(std::string_view text) {
  std::vector<Event> word;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    EventKind kind;
    if (c == 'L') kind = EventKind::LeftCusp;
    else if (c == 'R') kind = EventKind::RightCusp;
    else if (c == 'X') kind = EventKind::Crossing;
    else throw Error(ErrorKind::Parse, std::string("bad event letter '") + c + "'");
    ++i;
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error(ErrorKind::Parse, "event letter without position");
    word.push_back({kind, std::stoi(std::string(text.substr(start, i - start)))});
  }
  return word;
}

Event mirror(const Event& e) {
  switch (e.kind) {
    case EventKind::LeftCusp:
      return right_cusp(e.position);
    case EventKind::RightCusp:
      return left_cusp(e.position);
    case EventKind::Crossing:
      return e;
  }
  return e;
}

std::vector<Event> mirror(const std::vector<Event>& word) {
  std::vector<Event> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(mirror(*it));
  return out;
}

int FrontDiagram::right_count() const {
  int n = left_count;
  for (const Event& e : events) n += strand_delta(e.kind);
  return n;
}

const ComponentAttr& FrontDiagram::attr(ComponentId c) const {
  if (c < 1 || c > component_count()) fail_precondition("no component " + std::to_string(c));
  return components[static_cast<std::size_t>(c - 1)];
}

ComponentAttr& FrontDiagram::attr(ComponentId c) {
  if (c < 1 || c > component_count()) fail_precondition("no component " + std::to_string(c));
  return components[static_cast<std::size_t>(c - 1)];
}

std::optional<ComponentId> FrontDiagram::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].label == label) return static_cast<ComponentId>(i + 1);
  return std::nullopt;
}

ComponentId FrontDiagram::require_label(std::string_view label) const {
  if (auto c = find_label(label)) return *c;
  fail_precondition("unknown component label '" + std::string(label) + "'");
}

Replay replay(int left_count, const std::vector<Event>& events) {
  Replay r;
  r.counts.reserve(events.size() + 1);
  if (left_count < 0) {
    r.error = "negative left strand count";
    return r;
  }
  int n = left_count;
  r.counts.push_back(n);
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    bool ok = e.position >= 1 &&
              (e.kind == EventKind::LeftCusp ? e.position <= n + 1 : e.position + 1 <= n);
    if (!ok) {
      const char* name = e.kind == EventKind::LeftCusp    ? "LeftCusp"
                         : e.kind == EventKind::RightCusp ? "RightCusp"
                                                          : "Crossing";
      r.error = "event " + std::to_string(i) + ": " + name + " at position " +
                std::to_string(e.position) + " with " + std::to_string(n) + " strands";
      return r;
    }
    n += strand_delta(e.kind);
    r.counts.push_back(n);
  }
  return r;
}

std::vector<int> strand_counts(int left_count, const std::vector<Event>& events) {
  Replay r = replay(left_count, events);
  if (r.error) throw Error(ErrorKind::Validation, *r.error);
  return std::move(r.counts);
}

const char* coefficient_text(Coefficient c) {
  switch (c) {
    case Coefficient::None:
      return "none";
    case Coefficient::Plus:
      return "+1";
    case Coefficient::Minus:
      return "-1";
  }
  return "none";
}

}  // namespace fk
