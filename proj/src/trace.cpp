#include "frontkit/trace.hpp"

#include <algorithm>

namespace fk {

int slot_after(const Event& e, int s) {
  const int p = e.position;
  switch (e.kind) {
    case EventKind::LeftCusp:
      return s < p ? s : s + 2;
    case EventKind::RightCusp:
      return s < p ? s : (s <= p + 1 ? 0 : s - 2);
    case EventKind::Crossing:
      return s == p ? p + 1 : (s == p + 1 ? p : s);
  }
  return 0;
}

int slot_before(const Event& e, int s) {
  const int p = e.position;
  switch (e.kind) {
    case EventKind::LeftCusp:
      return s < p ? s : (s <= p + 1 ? 0 : s - 2);
    case EventKind::RightCusp:
      return s < p ? s : s + 2;
    case EventKind::Crossing:
      return s == p ? p + 1 : (s == p + 1 ? p : s);
  }
  return 0;
}

namespace {

struct Step {
  Node node;
  int dir = 0;
  bool wall = false;
};

Step advance(const std::vector<Event>& events, Node n, int dir) {
  const int last = static_cast<int>(events.size());
  if (dir > 0) {
    if (n.time == last) return {n, dir, true};
    const Event& e = events[static_cast<std::size_t>(n.time)];
    if (e.kind == EventKind::RightCusp && (n.slot == e.position || n.slot == e.position + 1)) {
      int other = n.slot == e.position ? e.position + 1 : e.position;
      return {{n.time, other}, -1, false};
    }
    return {{n.time + 1, slot_after(e, n.slot)}, 1, false};
  }
  if (n.time == 0) return {n, dir, true};
  const Event& e = events[static_cast<std::size_t>(n.time - 1)];
  if (e.kind == EventKind::LeftCusp && (n.slot == e.position || n.slot == e.position + 1)) {
    int other = n.slot == e.position ? e.position + 1 : e.position;
    return {{n.time, other}, 1, false};
  }
  return {{n.time - 1, slot_before(e, n.slot)}, -1, false};
}

}  // namespace

Trace::Trace(int left_count, const std::vector<Event>& events)
    : events_(events), counts_(strand_counts(left_count, events)) {
  offset_.resize(counts_.size() + 1, 0);
  for (std::size_t t = 0; t < counts_.size(); ++t)
    offset_[t + 1] = offset_[t] + static_cast<std::size_t>(counts_[t]);
  owner_.assign(offset_.back(), 0);
  dir_.assign(offset_.back(), 0);

  auto walk = [&](Node start, int dir, ComponentPath& path, ComponentId id) {
    Node n = start;
    int d = dir;
    while (true) {
      path.nodes.push_back(n);
      owner_[index(n)] = id;
      dir_[index(n)] = static_cast<signed char>(d);
      Step s = advance(events_, n, d);
      if (s.wall) return;
      if (s.node == start) return;
      n = s.node;
      d = s.dir;
    }
  };

  for (int t = 0; t < static_cast<int>(counts_.size()); ++t) {
    for (int s = 1; s <= counts_[static_cast<std::size_t>(t)]; ++s) {
      Node start{t, s};
      if (owner_[index(start)] != 0) continue;
      ComponentId id = static_cast<ComponentId>(paths_.size() + 1);
      // Probe rightward: a return to the start means the component is closed.
      Node n = start;
      int d = 1;
      bool closed = false;
      Node right_end = start;
      int right_wall_dir = 1;
      while (true) {
        Step st = advance(events_, n, d);
        if (st.wall) {
          right_end = n;
          right_wall_dir = d;
          break;
        }
        if (st.node == start) {
          closed = true;
          break;
        }
        n = st.node;
        d = st.dir;
      }
      ComponentPath path;
      path.closed = closed;
      if (closed) {
        walk(start, 1, path, id);
      } else {
        n = start;
        d = -1;
        Node left_end = start;
        int left_wall_dir = -1;
        while (true) {
          Step st = advance(events_, n, d);
          if (st.wall) {
            left_end = n;
            left_wall_dir = d;
            break;
          }
          n = st.node;
          d = st.dir;
        }
        // Begin at the end with the smaller (time, slot), moving away from its wall.
        Node begin = right_end;
        int begin_dir = -right_wall_dir;
        if (left_end < right_end) {
          begin = left_end;
          begin_dir = -left_wall_dir;
        }
        walk(begin, begin_dir, path, id);
      }
      paths_.push_back(std::move(path));
    }
  }
}

bool Trace::contains(Node n) const {
  return n.time >= 0 && n.time < static_cast<int>(counts_.size()) && n.slot >= 1 &&
         n.slot <= counts_[static_cast<std::size_t>(n.time)];
}

std::vector<ComponentId> Trace::event_components(int j) const {
  const Event& e = events_[static_cast<std::size_t>(j)];
  std::vector<ComponentId> out;
  if (e.kind == EventKind::LeftCusp) out.push_back(owner({j + 1, e.position}));
  else {
    out.push_back(owner({j, e.position}));
    out.push_back(owner({j, e.position + 1}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ComponentPath> trace_components(const FrontDiagram& d) { return Trace(d).paths(); }

}  // namespace fk
