#include "frontkit/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "frontkit/trace.hpp"

namespace fk {

namespace {

constexpr double kStep = 40;    // horizontal distance between events
constexpr double kSlot = 30;    // vertical distance between slots
constexpr double kMargin = 30;
constexpr double kHalf = 12;    // half width of an event column

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

const char* coefficient_class(Coefficient c) {
  switch (c) {
    case Coefficient::Plus:
      return "plus";
    case Coefficient::Minus:
      return "minus";
    case Coefficient::None:
      break;
  }
  return "plain";
}

const char* colour(Coefficient c) {
  switch (c) {
    case Coefficient::Plus:
      return "#1f4e9c";
    case Coefficient::Minus:
      return "#a51c1c";
    case Coefficient::None:
      break;
  }
  return "#222222";
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string render_svg(const FrontDiagram& d) {
  const Trace tr(d);
  const int n = static_cast<int>(d.events.size());
  int max_count = 1;
  for (int c : tr.counts()) max_count = std::max(max_count, c);
  const double width = 2 * kMargin + (n + 1) * kStep;
  const double height = 2 * kMargin + (max_count + 1) * kSlot;

  auto event_x = [&](int j) { return kMargin + (j + 1) * kStep; };
  // Horizontal extent of segment (t, s): from the right edge of event t-1 to the left edge of event t.
  auto seg_left = [&](int t) { return t == 0 ? kMargin : event_x(t - 1) + kHalf; };
  auto seg_right = [&](int t) { return t == n ? width - kMargin : event_x(t) - kHalf; };
  auto y = [&](double slot) { return height - kMargin - slot * kSlot; };

  std::vector<std::ostringstream> paths(d.components.size());
  auto owner_path = [&](int t, int s) -> std::ostringstream& { return paths[tr.owner({t, s}) - 1]; };

  for (int t = 0; t <= n; ++t)
    for (int s = 1; s <= tr.count(t); ++s)
      owner_path(t, s) << "M" << num(seg_left(t)) << " " << num(y(s)) << " H" << num(seg_right(t)) << " ";

  std::ostringstream gaps;
  for (int j = 0; j < n; ++j) {
    const Event& e = d.events[j];
    const double xl = event_x(j) - kHalf, xr = event_x(j) + kHalf, xc = event_x(j);
    for (int s = 1; s <= tr.count(j); ++s) {
      const int to = slot_after(e, s);
      if (to != 0)
        owner_path(j, s) << "M" << num(xl) << " " << num(y(s)) << " L" << num(xr) << " " << num(y(to)) << " ";
    }
    const int p = e.position;
    const double mid = (y(p) + y(p + 1)) / 2;
    if (e.kind == EventKind::LeftCusp) {
      owner_path(j + 1, p) << "M" << num(xr) << " " << num(y(p)) << " Q" << num(xc) << " " << num(y(p)) << " "
                           << num(xl) << " " << num(mid) << " Q" << num(xc) << " " << num(y(p + 1)) << " "
                           << num(xr) << " " << num(y(p + 1)) << " ";
    } else if (e.kind == EventKind::RightCusp) {
      owner_path(j, p) << "M" << num(xl) << " " << num(y(p)) << " Q" << num(xc) << " " << num(y(p)) << " "
                       << num(xr) << " " << num(mid) << " Q" << num(xc) << " " << num(y(p + 1)) << " " << num(xl)
                       << " " << num(y(p + 1)) << " ";
    } else {
      // The strand moving up (slot p to p+1) passes behind.
      const double dx = (xr - xl) * 0.2, dy = (y(p + 1) - y(p)) * 0.2;
      gaps << "<line class=\"gap\" x1=\"" << num(xc - dx) << "\" y1=\"" << num(mid - dy) << "\" x2=\""
           << num(xc + dx) << "\" y2=\"" << num(mid + dy) << "\" stroke=\"#ffffff\" stroke-width=\"6\"/>\n";
    }
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "<title>" << escape(d.name) << "</title>\n";
  if (d.spin > 0) {
    const double axis = event_x(0) + (n - 1) * kStep / 2;
    os << "<line class=\"axis\" x1=\"" << num(axis) << "\" y1=\"" << num(kMargin / 2) << "\" x2=\"" << num(axis)
       << "\" y2=\"" << num(height - kMargin / 2) << "\" stroke=\"#777777\" stroke-dasharray=\"6 4\"/>\n";
  }
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const ComponentAttr& a = d.components[c];
    os << "<path class=\"component " << coefficient_class(a.coefficient) << "\" id=\"c" << c + 1 << "\" d=\""
       << paths[c].str() << "\" fill=\"none\" stroke=\"" << colour(a.coefficient)
       << "\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
  }
  os << gaps.str();
  // Redraw the front strand of every crossing over its gap.
  for (int j = 0; j < n; ++j) {
    const Event& e = d.events[j];
    if (e.kind != EventKind::Crossing) continue;
    const int p = e.position;
    const ComponentAttr& a = d.attr(tr.owner({j, p + 1}));
    os << "<line class=\"front\" x1=\"" << num(event_x(j) - kHalf) << "\" y1=\"" << num(y(p + 1)) << "\" x2=\""
       << num(event_x(j) + kHalf) << "\" y2=\"" << num(y(p)) << "\" stroke=\"" << colour(a.coefficient)
       << "\" stroke-width=\"2\"/>\n";
  }
  const auto& paths_by_id = tr.paths();
  auto anchor = [&](std::size_t c) {
    const Node first = paths_by_id[c].nodes.front();
    return std::pair{(seg_left(first.time) + seg_right(first.time)) / 2, y(first.slot)};
  };
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const ComponentAttr& a = d.components[c];
    if (paths_by_id[c].nodes.empty()) continue;
    auto [ax, ay] = anchor(c);
    std::string text = a.label;
    if (a.coefficient != Coefficient::None) text += (text.empty() ? "" : " ") + std::string("(") + coefficient_text(a.coefficient) + ")";
    if (!text.empty())
      os << "<text class=\"label\" x=\"" << num(ax) << "\" y=\"" << num(ay - 6) << "\" font-size=\"11\" fill=\""
         << colour(a.coefficient) << "\" text-anchor=\"middle\">" << escape(text) << "</text>\n";
    int k = 0;
    for (auto [on, sign] : {std::pair{a.node_plus, "+"}, std::pair{a.node_minus, "-"}}) {
      if (!on) continue;
      const double nx = ax + 14 + 14 * k++;
      os << "<circle class=\"node\" cx=\"" << num(nx) << "\" cy=\"" << num(ay) << "\" r=\"5\" fill=\"#ffffff\" stroke=\""
         << colour(a.coefficient) << "\"/>\n";
      os << "<text class=\"node-sign\" x=\"" << num(nx) << "\" y=\"" << num(ay + 3.5) << "\" font-size=\"9\" text-anchor=\"middle\">"
         << sign << "</text>\n";
    }
    for (ComponentId other : a.dashed_links) {
      if (paths_by_id[other - 1].nodes.empty()) continue;
      auto [bx, by] = anchor(static_cast<std::size_t>(other - 1));
      os << "<line class=\"link\" x1=\"" << num(ax) << "\" y1=\"" << num(ay) << "\" x2=\"" << num(bx) << "\" y2=\""
         << num(by) << "\" stroke=\"#555555\" stroke-dasharray=\"3 3\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fk
