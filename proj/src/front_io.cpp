#include "frontkit/front_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "frontkit/error.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/transport.hpp"
#include "frontkit/validate.hpp"

namespace fk {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

using Statement = std::vector<Token>;

std::vector<Statement> tokenize(std::string_view text) {
  std::vector<Statement> out(1);
  int line = 1, col = 1;
  std::size_t i = 0;
  auto next_statement = [&] {
    if (!out.back().empty()) out.emplace_back();
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      next_statement();
      ++line;
      col = 1;
      ++i;
    } else if (c == ';') {
      next_statement();
      ++col;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
    } else {
      Token t{{}, line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ';' &&
             text[i] != '#') {
        t.text += text[i];
        ++i;
        ++col;
      }
      out.back().push_back(std::move(t));
    }
  }
  if (out.back().empty()) out.pop_back();
  return out;
}

[[noreturn]] void syntax(const Token& t, const std::string& what) { throw ParseError(t.line, t.col, what); }

int parse_int(const Token& t, const std::string& what) {
  const std::string& s = t.text;
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    syntax(t, "expected " + what + ", got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    syntax(t, what + " out of range");
  }
}

const std::set<std::string> kAttrKeywords = {"at", "coeff", "node+", "node-", "dashed", "orient"};

struct ComponentLine {
  Token label;
  std::optional<Node> anchor;
  ComponentAttr attr;
  std::vector<Token> dashed;
};

ComponentLine parse_component(const Statement& st) {
  if (st.size() < 2) syntax(st[0], "component needs a label");
  ComponentLine cl;
  cl.label = st[1];
  if (kAttrKeywords.count(cl.label.text)) syntax(st[1], "label may not be a keyword");
  cl.attr.label = st[1].text;
  std::size_t i = 2;
  auto need = [&](const char* what) -> const Token& {
    if (i >= st.size()) syntax(st.back(), std::string("missing ") + what);
    return st[i++];
  };
  while (i < st.size()) {
    const Token& key = st[i++];
    if (key.text == "at") {
      const Token& v = need("anchor");
      auto colon = v.text.find(':');
      if (colon == std::string::npos) syntax(v, "anchor must be <time>:<slot>");
      Token a{v.text.substr(0, colon), v.line, v.col};
      Token b{v.text.substr(colon + 1), v.line, v.col + static_cast<int>(colon) + 1};
      cl.anchor = Node{parse_int(a, "anchor time"), parse_int(b, "anchor slot")};
    } else if (key.text == "coeff") {
      const Token& v = need("coefficient");
      if (v.text == "+1") cl.attr.coefficient = Coefficient::Plus;
      else if (v.text == "-1") cl.attr.coefficient = Coefficient::Minus;
      else syntax(v, "coefficient must be +1 or -1");
    } else if (key.text == "node+") {
      cl.attr.node_plus = true;
    } else if (key.text == "node-") {
      cl.attr.node_minus = true;
    } else if (key.text == "orient") {
      const Token& v = need("orientation");
      if (v.text == "fwd") cl.attr.orientation = Orientation::Forward;
      else if (v.text == "bwd") cl.attr.orientation = Orientation::Backward;
      else syntax(v, "orientation must be fwd or bwd");
    } else if (key.text == "dashed") {
      std::size_t before = i;
      while (i < st.size() && !kAttrKeywords.count(st[i].text)) cl.dashed.push_back(st[i++]);
      if (i == before) syntax(key, "dashed needs at least one label");
    } else {
      syntax(key, "unknown component attribute '" + key.text + "'");
    }
  }
  return cl;
}

std::optional<Event> event_token(const Token& t, const Token* next, bool& used_next) {
  used_next = false;
  if (t.text.empty()) return std::nullopt;
  EventKind kind;
  switch (t.text[0]) {
    case 'L':
      kind = EventKind::LeftCusp;
      break;
    case 'R':
      kind = EventKind::RightCusp;
      break;
    case 'X':
      kind = EventKind::Crossing;
      break;
    default:
      return std::nullopt;
  }
  if (t.text.size() > 1) {
    Token num{t.text.substr(1), t.line, t.col + 1};
    return Event{kind, parse_int(num, "event position")};
  }
  if (!next) syntax(t, "event without position");
  used_next = true;
  return Event{kind, parse_int(*next, "event position")};
}

}  // namespace

FrontDiagram make_diagram(std::string name, int spin, int left_count, std::vector<Event> events) {
  FrontDiagram d;
  d.name = std::move(name);
  d.spin = spin;
  d.left_count = left_count;
  d.events = std::move(events);
  Trace tr(d);
  d.components.resize(static_cast<std::size_t>(tr.component_count()));
  for (auto& a : d.components) a.label = fresh_label(d.components, "c");
  return d;
}

FrontDiagram parse_front(std::string_view text) {
  std::vector<Statement> statements = tokenize(text);
  FrontDiagram d;
  bool seen_events = false, in_events = false;
  std::vector<ComponentLine> lines;
  Token events_token;
  for (const Statement& st : statements) {
    std::size_t i = 0;
    if (!in_events) {
      const Token& head = st[0];
      if (head.text == "diagram") {
        if (st.size() != 2) syntax(head, "usage: diagram <name>");
        d.name = st[1].text;
        continue;
      }
      if (head.text == "spin" || head.text == "left") {
        if (st.size() != 2) syntax(head, "usage: " + head.text + " <count>");
        int v = parse_int(st[1], head.text + " value");
        if (v < 0) syntax(st[1], head.text + " must be non-negative");
        (head.text == "spin" ? d.spin : d.left_count) = v;
        continue;
      }
      if (head.text == "component") {
        lines.push_back(parse_component(st));
        continue;
      }
      if (head.text != "events") syntax(head, "unknown statement '" + head.text + "'");
      if (seen_events) syntax(head, "duplicate events block");
      seen_events = in_events = true;
      events_token = head;
      i = 1;
    }
    for (; i < st.size(); ++i) {
      if (st[i].text == "end") {
        in_events = false;
        if (i + 1 != st.size()) syntax(st[i + 1], "unexpected text after end");
        break;
      }
      bool used_next = false;
      auto e = event_token(st[i], i + 1 < st.size() ? &st[i + 1] : nullptr, used_next);
      if (!e) syntax(st[i], "expected an event (L|X|R <i>) or end, got '" + st[i].text + "'");
      d.events.push_back(*e);
      if (used_next) ++i;
    }
  }
  if (in_events) syntax(events_token, "events block is missing its end");
  if (!seen_events) throw ParseError(1, 1, "missing events block");

  Replay rp = replay(d.left_count, d.events);
  if (rp.error) throw Error(ErrorKind::Validation, *rp.error);
  Trace tr(d);
  const int n = tr.component_count();
  d.components.assign(static_cast<std::size_t>(n), ComponentAttr{});
  std::vector<int> line_of(static_cast<std::size_t>(n), -1);
  bool anchored = !lines.empty() && lines.front().anchor.has_value();
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const ComponentLine& cl = lines[k];
    if (cl.anchor.has_value() != anchored) syntax(cl.label, "either every component line has an anchor or none does");
    ComponentId c;
    if (anchored) {
      if (!tr.contains(*cl.anchor)) syntax(cl.label, "anchor is not a strand segment");
      c = tr.owner(*cl.anchor);
    } else {
      if (static_cast<int>(k) >= n) syntax(cl.label, "more component lines than traced components");
      c = static_cast<ComponentId>(k + 1);
    }
    if (line_of[static_cast<std::size_t>(c - 1)] >= 0) syntax(cl.label, "component described twice");
    line_of[static_cast<std::size_t>(c - 1)] = static_cast<int>(k);
  }
  std::map<std::string, ComponentId> by_label;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (by_label.count(lines[k].attr.label)) syntax(lines[k].label, "duplicate label '" + lines[k].attr.label + "'");
    by_label[lines[k].attr.label] = 0;
  }
  for (ComponentId c = 1; c <= n; ++c) {
    int k = line_of[static_cast<std::size_t>(c - 1)];
    if (k >= 0) {
      d.components[static_cast<std::size_t>(c - 1)] = lines[static_cast<std::size_t>(k)].attr;
      by_label[lines[static_cast<std::size_t>(k)].attr.label] = c;
    }
  }
  for (ComponentId c = 1; c <= n; ++c) {
    auto& a = d.components[static_cast<std::size_t>(c - 1)];
    if (line_of[static_cast<std::size_t>(c - 1)] < 0) {
      a.label = fresh_label(d.components, "c");
      by_label[a.label] = c;
    }
  }
  for (ComponentId c = 1; c <= n; ++c) {
    int k = line_of[static_cast<std::size_t>(c - 1)];
    if (k < 0) continue;
    auto& a = d.components[static_cast<std::size_t>(c - 1)];
    for (const Token& t : lines[static_cast<std::size_t>(k)].dashed) {
      auto it = by_label.find(t.text);
      if (it == by_label.end()) syntax(t, "unknown component label '" + t.text + "'");
      a.dashed_links.push_back(it->second);
    }
    std::sort(a.dashed_links.begin(), a.dashed_links.end());
    a.dashed_links.erase(std::unique(a.dashed_links.begin(), a.dashed_links.end()), a.dashed_links.end());
  }
  auto violations = validate_diagram(d);
  if (!violations.empty()) throw Error(ErrorKind::Validation, violations.front().message);
  return d;
}

std::string serialize_front(const FrontDiagram& d) {
  std::ostringstream out;
  out << "diagram " << d.name << "\n";
  out << "spin " << d.spin << "\n";
  out << "left " << d.left_count << "\n";
  out << "events\n";
  for (const Event& e : d.events) out << event_letter(e.kind) << ' ' << e.position << "\n";
  out << "end\n";
  Trace tr(d);
  for (ComponentId c = 1; c <= d.component_count(); ++c) {
    const ComponentAttr& a = d.attr(c);
    Node anchor = tr.path(c).nodes.front();
    out << "component " << a.label << " at " << anchor.time << ':' << anchor.slot;
    if (a.coefficient != Coefficient::None) out << " coeff " << coefficient_text(a.coefficient);
    if (a.node_plus) out << " node+";
    if (a.node_minus) out << " node-";
    if (!a.dashed_links.empty()) {
      out << " dashed";
      for (ComponentId t : a.dashed_links) out << ' ' << d.attr(t).label;
    }
    if (a.orientation == Orientation::Backward) out << " orient bwd";
    out << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
}

FrontDiagram load_front(const std::string& path) { return parse_front(read_text_file(path)); }

}  // namespace fk
