#include "frontkit/word.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "frontkit/error.hpp"

namespace fk {

namespace {

// Footprints in doubled "gap" coordinates: slot s sits at 2s, the gap above it
// at 2s+1. `first` selects the role of the event in the pair being swapped.
std::pair<int, int> footprint(const Event& e, bool first) {
  const int p = e.position;
  const bool wide = first ? e.kind != EventKind::RightCusp : e.kind != EventKind::LeftCusp;
  if (wide) return {2 * p, 2 * p + 2};
  return {2 * p - 1, 2 * p - 1};
}

bool event_less(const Event& a, const Event& b) {
  return std::make_tuple(a.position, static_cast<int>(a.kind)) < std::make_tuple(b.position, static_cast<int>(b.kind));
}

// Moves word[from] down to index `to` by commutations; false leaves the word untouched.
bool bubble_back(std::vector<Event>& word, int from, int to, std::vector<int>* swaps = nullptr) {
  std::vector<Event> trial(word.begin() + to, word.begin() + from + 1);
  for (int k = static_cast<int>(trial.size()) - 2; k >= 0; --k) {
    auto r = commute(trial[static_cast<std::size_t>(k)], trial[static_cast<std::size_t>(k + 1)]);
    if (!r) return false;
    trial[static_cast<std::size_t>(k)] = r->first;
    trial[static_cast<std::size_t>(k + 1)] = r->second;
  }
  std::copy(trial.begin(), trial.end(), word.begin() + to);
  if (swaps)
    for (int k = from - 1; k >= to; --k) swaps->push_back(k);
  return true;
}

Event shifted(const Event& e, int by) { return {e.kind, e.position + by}; }

}  // namespace

std::optional<std::pair<Event, Event>> commute(const Event& a, const Event& b) {
  auto [alo, ahi] = footprint(a, true);
  auto [blo, bhi] = footprint(b, false);
  if (blo > ahi) return std::make_pair(shifted(b, -strand_delta(a.kind)), a);
  if (bhi < alo) return std::make_pair(b, shifted(a, strand_delta(b.kind)));
  return std::nullopt;
}

std::vector<int> canonical_swaps(const std::vector<Event>& events) {
  // Several events can reach the front as the same letter (stacked births,
  // for example), so every tied remainder is followed until the tie resolves.
  constexpr std::size_t kMaxStates = 4096;
  struct State {
    std::vector<Event> rest;
    std::vector<int> swaps;
  };
  std::vector<State> states{{events, {}}};
  auto less = [](const State& a, const State& b) {
    return std::lexicographical_compare(a.rest.begin(), a.rest.end(), b.rest.begin(), b.rest.end(), event_less);
  };
  auto same = [](const State& a, const State& b) { return a.rest == b.rest; };
  for (std::size_t step = 0; step < events.size(); ++step) {
    const int offset = static_cast<int>(step);
    std::optional<Event> best;
    std::vector<State> next;
    for (const State& st : states) {
      for (int i = 0; i < static_cast<int>(st.rest.size()); ++i) {
        State trial{st.rest, {}};
        std::vector<int> local;
        if (!bubble_back(trial.rest, i, 0, &local)) continue;
        const Event e = trial.rest.front();
        if (best && event_less(*best, e)) continue;
        if (!best || event_less(e, *best)) {
          best = e;
          next.clear();
        }
        trial.rest.erase(trial.rest.begin());
        trial.swaps = st.swaps;
        for (int k : local) trial.swaps.push_back(k + offset);
        next.push_back(std::move(trial));
      }
    }
    std::stable_sort(next.begin(), next.end(), less);
    next.erase(std::unique(next.begin(), next.end(), same), next.end());
    if (next.size() > kMaxStates) next.resize(kMaxStates);
    states = std::move(next);
  }
  return states.front().swaps;
}

std::vector<Event> apply_swaps(std::vector<Event> events, const std::vector<int>& swaps) {
  for (int k : swaps) {
    auto r = commute(events[static_cast<std::size_t>(k)], events[static_cast<std::size_t>(k + 1)]);
    if (!r) throw Error(ErrorKind::Assertion, "swap of non-commuting events at " + std::to_string(k));
    events[static_cast<std::size_t>(k)] = r->first;
    events[static_cast<std::size_t>(k + 1)] = r->second;
  }
  return events;
}

std::vector<Event> canonical_word(const std::vector<Event>& events) {
  return apply_swaps(events, canonical_swaps(events));
}

std::optional<Gathered> gather(const std::vector<Event>& word, int start, const std::vector<Event>& pattern,
                               int limit) {
  const int n = std::min(limit, static_cast<int>(word.size()));
  const int len = static_cast<int>(pattern.size());
  if (len == 0 || start + len > n) return std::nullopt;
  std::vector<Event> w = word;
  if (w[static_cast<std::size_t>(start)].kind != pattern[0].kind) return std::nullopt;
  int have = 1;
  int block_start = start;
  std::vector<int> swaps;
  // Foreign events ahead of the partial block may be pushed left past it,
  // which moves the block one index right.
  while (have < len) {
    const int base = w[static_cast<std::size_t>(block_start)].position - pattern[0].position;
    const Event want = shifted(pattern[static_cast<std::size_t>(have)], base);
    const int end = block_start + have;
    bool found = false;
    for (int j = end; j < n && !found; ++j) {
      std::vector<Event> trial = w;
      std::vector<int> local;
      if (!bubble_back(trial, j, end, &local)) continue;
      if (trial[static_cast<std::size_t>(end)] == want) {
        w = std::move(trial);
        swaps.insert(swaps.end(), local.begin(), local.end());
        found = true;
      }
    }
    if (found) {
      ++have;
      continue;
    }
    // Push the first foreign event left past the whole partial block.
    if (end >= n) return std::nullopt;
    std::vector<Event> trial = w;
    if (!bubble_back(trial, end, block_start, &swaps)) return std::nullopt;
    w = std::move(trial);
    ++block_start;
    const int nb = w[static_cast<std::size_t>(block_start)].position - pattern[0].position;
    for (int k = 0; k < have; ++k)
      if (w[static_cast<std::size_t>(block_start + k)] != shifted(pattern[static_cast<std::size_t>(k)], nb))
        return std::nullopt;
  }
  const int base = w[static_cast<std::size_t>(block_start)].position - pattern[0].position;
  if (base < 0) return std::nullopt;
  return Gathered{std::move(w), block_start, base, std::move(swaps)};
}

Rebuilt delete_components(const Trace& tr, const std::vector<Event>& events, const std::set<ComponentId>& gone) {
  Rebuilt out;
  const int last = static_cast<int>(events.size());
  auto kept = [&](int t, int s) { return !gone.count(tr.owner({t, s})); };
  auto new_slot = [&](int t, int s) {
    int k = 0;
    for (int i = 1; i <= s; ++i)
      if (kept(t, i)) ++k;
    return k;
  };
  auto link_time = [&](int t) {
    const int nt = static_cast<int>(out.events.size());
    for (int s = 1; s <= tr.count(t); ++s)
      if (kept(t, s)) out.links.push_back({{t, s}, {nt, new_slot(t, s)}});
  };
  for (int j = 0; j < last; ++j) {
    link_time(j);
    const Event& e = events[static_cast<std::size_t>(j)];
    const int p = e.position;
    switch (e.kind) {
      case EventKind::Crossing:
        if (kept(j, p) && kept(j, p + 1)) out.events.push_back(crossing(new_slot(j, p)));
        break;
      case EventKind::LeftCusp:
        if (kept(j + 1, p)) out.events.push_back(left_cusp(new_slot(j, p - 1) + 1));
        break;
      case EventKind::RightCusp:
        if (kept(j, p)) out.events.push_back(right_cusp(new_slot(j, p)));
        break;
    }
  }
  link_time(last);
  return out;
}

PushOff push_off(const Trace& tr, const std::vector<Event>& events, ComponentId c, bool above, bool mirror_safe) {
  PushOff out;
  out.copy_offset = above ? 1 : -1;
  const int last = static_cast<int>(events.size());
  auto in_c = [&](int t, int s) { return tr.owner({t, s}) == c; };
  out.slot_map.resize(static_cast<std::size_t>(last + 1));
  for (int t = 0; t <= last; ++t) {
    auto& row = out.slot_map[static_cast<std::size_t>(t)];
    int cur = 1;
    for (int s = 1; s <= tr.count(t); ++s) {
      if (in_c(t, s)) {
        row.push_back(above ? cur : cur + 1);
        cur += 2;
      } else {
        row.push_back(cur);
        cur += 1;
      }
    }
  }
  auto low = [&](int t, int s) {
    const int v = out.slot_map[static_cast<std::size_t>(t)][static_cast<std::size_t>(s - 1)];
    return in_c(t, s) && !above ? v - 1 : v;
  };
  auto below_count = [&](int t, int p) {
    int k = 0;
    for (int s = 1; s < p; ++s) k += in_c(t, s) ? 2 : 1;
    return k;
  };
  out.time_map.resize(static_cast<std::size_t>(last + 1));
  for (int j = 0; j < last; ++j) {
    out.time_map[static_cast<std::size_t>(j)] = static_cast<int>(out.events.size());
    const Event& e = events[static_cast<std::size_t>(j)];
    const int p = e.position;
    const bool right_half = j > last - 1 - j;
    auto emit = [&](std::vector<Event> w) { out.events.insert(out.events.end(), w.begin(), w.end()); };
    switch (e.kind) {
      case EventKind::Crossing: {
        const bool lo = in_c(j, p), hi = in_c(j, p + 1);
        const int b = low(j, p);
        if (!lo && !hi) emit({crossing(b)});
        else if (lo && !hi) emit({crossing(b + 1), crossing(b)});
        else if (!lo && hi) emit({crossing(b), crossing(b + 1)});
        else {
          if (mirror_safe && j == last - 1 - j)
            throw Error(ErrorKind::Precondition, "cannot double a self-crossing on the symmetry axis");
          if (mirror_safe && right_half) emit({crossing(b + 1), crossing(b + 2), crossing(b), crossing(b + 1)});
          else emit({crossing(b + 1), crossing(b), crossing(b + 2), crossing(b + 1)});
        }
        break;
      }
      case EventKind::LeftCusp: {
        const int i = below_count(j, p) + 1;
        if (in_c(j + 1, p)) emit({left_cusp(i), left_cusp(i + 2), crossing(i + 1)});
        else emit({left_cusp(i)});
        break;
      }
      case EventKind::RightCusp: {
        const int i = low(j, p);
        if (in_c(j, p)) emit({crossing(i + 1), right_cusp(i + 2), right_cusp(i)});
        else emit({right_cusp(i)});
        break;
      }
    }
  }
  out.time_map[static_cast<std::size_t>(last)] = static_cast<int>(out.events.size());
  for (int t = 0; t <= last; ++t)
    for (int s = 1; s <= tr.count(t); ++s)
      out.links.push_back({{t, s}, {out.time_map[static_cast<std::size_t>(t)],
                                    out.slot_map[static_cast<std::size_t>(t)][static_cast<std::size_t>(s - 1)]}});
  const Node first = tr.path(c).nodes.front();
  out.added.push_back({out.time_map[static_cast<std::size_t>(first.time)],
                       out.slot_map[static_cast<std::size_t>(first.time)][static_cast<std::size_t>(first.slot - 1)] +
                           out.copy_offset});
  return out;
}

std::vector<Event> flip_vertical(int left_count, const std::vector<Event>& events) {
  std::vector<Event> out;
  out.reserve(events.size());
  int n = left_count;
  for (const Event& e : events) {
    switch (e.kind) {
      case EventKind::Crossing:
        out.push_back(crossing(n - e.position));
        break;
      case EventKind::RightCusp:
        out.push_back(right_cusp(n - e.position));
        break;
      case EventKind::LeftCusp:
        out.push_back(left_cusp(n + 2 - e.position));
        break;
    }
    n += strand_delta(e.kind);
  }
  return out;
}

FrontDiagram flip_vertical(const FrontDiagram& d) {
  Trace tr(d);
  Transport how;
  for (int t = 0; t <= tr.event_count(); ++t)
    for (int s = 1; s <= tr.count(t); ++s) how.links.push_back({{t, s}, {t, tr.count(t) + 1 - s}});
  return transport(d, tr, flip_vertical(d.left_count, d.events), how);
}

}  // namespace fk
