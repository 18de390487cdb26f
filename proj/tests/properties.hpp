#pragma once

// Randomized move properties shared by the unit suite and the acceptance
// runner. Diagrams are grown from a (-1)-unknot by random insertions; every
// property runs until `cases` applications succeeded and records failures.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frontkit/error.hpp"
#include "frontkit/front_io.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/moves.hpp"
#include "frontkit/ribbon.hpp"
#include "frontkit/script.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/validate.hpp"

namespace props {

using namespace fk;
using Rng = std::mt19937_64;

struct PropertyResult {
  std::string name;
  int cases = 0;
  int attempts = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty() && cases > 0; }
};

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::string describe(const FrontDiagram& d) {
  return "spin " + std::to_string(d.spin) + " word [" + to_string(d.events) + "]";
}

inline int total_writhe(const FrontDiagram& d) {
  const CrossingData cd(d);
  int w = 0;
  for (ComponentId a = 1; a <= d.component_count(); ++a) {
    w += cd.writhe(a);
    for (ComponentId b = a + 1; b <= d.component_count(); ++b) w += cd.signed_crossings(a, b);
  }
  return w;
}

inline bool is_plus(const FrontDiagram& d, ComponentId c) { return d.attr(c).coefficient == Coefficient::Plus; }

// A strand at some time owned by a (-1) component; slot 0 when none was found.
struct StrandPick {
  int time = 0;
  int slot = 0;
  ComponentId owner = 0;
};

inline StrandPick pick_minus_strand(Rng& rng, const FrontDiagram& d, int max_time) {
  const Trace tr(d);
  for (int tries = 0; tries < 20; ++tries) {
    const int e = uniform(rng, 0, max_time);
    if (tr.count(e) == 0) continue;
    const int p = uniform(rng, 1, tr.count(e));
    const ComponentId c = tr.owner({e, p});
    if (d.attr(c).coefficient == Coefficient::Minus) return {e, p, c};
  }
  return {};
}

// Two adjacent strands at time e, not both on the same (+1) component.
inline StrandPick pick_pair(Rng& rng, const FrontDiagram& d, int max_time) {
  const Trace tr(d);
  for (int tries = 0; tries < 20; ++tries) {
    const int e = uniform(rng, 0, max_time);
    if (tr.count(e) < 2) continue;
    const int p = uniform(rng, 1, tr.count(e) - 1);
    const ComponentId a = tr.owner({e, p}), b = tr.owner({e, p + 1});
    if (a == b && is_plus(d, a)) continue;
    return {e, p, a};
  }
  return {};
}

inline FrontDiagram seed_unknot(int spin) {
  FrontDiagram d = make_diagram("random", spin, 0, parse_word("L1 R1"));
  d.attr(1).coefficient = Coefficient::Minus;
  d.attr(1).label = "K";
  return d;
}

// One random insertion; returns false when the chosen site was refused.
inline bool grow_once(Rng& rng, FrontDiagram& d) {
  const int n = static_cast<int>(d.events.size());
  const int max_time = d.spin > 0 ? n / 2 : n;
  try {
    switch (uniform(rng, 0, 4)) {
      case 0: {
        const StrandPick s = pick_pair(rng, d, max_time);
        if (!s.slot) return false;
        d = clasp(d, {s.time, s.time, s.slot, s.slot + 1, {}}, ClaspDirection::Clasp);
        return true;
      }
      case 1: {
        const StrandPick s = pick_minus_strand(rng, d, max_time);
        if (!s.slot) return false;
        d = stabilize(d, s.owner, {s.time, s.time, s.slot, s.slot, {}}, StabilizeDirection::Stabilize);
        return true;
      }
      case 2: {
        const StrandPick s = pick_minus_strand(rng, d, max_time);
        if (!s.slot) return false;
        d = reidemeister(d, ReidemeisterMove::R1, uniform(rng, 0, 1) ? "up" : "down", RewriteDirection::Insert,
                         {s.time, s.time, s.slot, s.slot, {}});
        return true;
      }
      case 3: {
        const StrandPick s = pick_pair(rng, d, max_time);
        if (!s.slot) return false;
        const auto variants = reidemeister_variants(ReidemeisterMove::R2);
        const std::string& v = variants[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(variants.size()) - 1))];
        const LocalRule& rule = reidemeister_rule(ReidemeisterMove::R2, v);
        const int e1 = s.time + static_cast<int>(rule.simple.size());
        d = reidemeister(d, ReidemeisterMove::R2, v, RewriteDirection::Insert,
                         {s.time, e1, s.slot, s.slot + rule.width - 1, {}});
        return true;
      }
      default: {
        if (d.component_count() > 3) return false;
        const int e = d.spin > 0 ? n / 2 : uniform(rng, 0, n);
        const int gap = uniform(rng, 1, Trace(d).count(e) + 1);
        d = birth_cancel_pair(d, {e, e, gap, gap, {}}, BirthDirection::Birth);
        return true;
      }
    }
  } catch (const Error&) {
    return false;
  }
}

inline FrontDiagram random_diagram(Rng& rng, int spin, int max_moves) {
  FrontDiagram d = seed_unknot(spin);
  const int moves = uniform(rng, 0, max_moves);
  for (int i = 0; i < moves; ++i) grow_once(rng, d);
  return d;
}

inline int euler(const FrontDiagram& d) { return handle_census(d).euler; }

// Runs `body` on fresh random diagrams until `cases` bodies returned true.
// The body returns false to decline a diagram (no applicable site) and
// appends to `failures` when a property is violated.
inline PropertyResult run_property(const std::string& name, std::uint64_t seed, int cases, int spin, int max_moves,
                                   const std::function<bool(Rng&, const FrontDiagram&, std::vector<std::string>&)>& body) {
  PropertyResult out;
  out.name = name;
  Rng rng(seed);
  while (out.cases < cases && out.attempts < 50 * cases) {
    ++out.attempts;
    const FrontDiagram d = random_diagram(rng, spin, max_moves);
    try {
      if (body(rng, d, out.failures)) ++out.cases;
    } catch (const std::exception& e) {
      out.failures.push_back(describe(d) + ": " + e.what());
      ++out.cases;
    }
    if (out.failures.size() > 5) break;
  }
  if (out.cases < cases) out.failures.push_back("only " + std::to_string(out.cases) + " applicable cases");
  return out;
}

#define PROP_CHECK(cond, what)                                    \
  do {                                                            \
    if (!(cond)) failures.push_back(describe(d) + ": " + (what)); \
  } while (0)

inline PropertyResult clasp_inverse(std::uint64_t seed, int cases) {
  return run_property("clasp then unclasp is the identity; writhe moves by 2; chi fixed", seed, cases, 0, 6,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const StrandPick s = pick_pair(rng, d, static_cast<int>(d.events.size()));
                        if (!s.slot) return false;
                        const FrontDiagram c = clasp(d, {s.time, s.time, s.slot, s.slot + 1, {}}, ClaspDirection::Clasp);
                        const FrontDiagram back =
                            clasp(c, {s.time, s.time + 2, s.slot, s.slot + 1, {}}, ClaspDirection::Unclasp);
                        PROP_CHECK(back == d, "unclasp did not restore the diagram");
                        PROP_CHECK(std::abs(total_writhe(c) - total_writhe(d)) == 2, "writhe change is not 2");
                        PROP_CHECK(euler(c) == euler(d), "clasp changed chi");
                        return true;
                      });
}

inline PropertyResult stabilize_inverse(std::uint64_t seed, int cases) {
  return run_property("stabilize then destabilize is the identity; tb -2, rot fixed, chi fixed", seed, cases, 0, 6,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const StrandPick s = pick_minus_strand(rng, d, static_cast<int>(d.events.size()));
                        if (!s.slot) return false;
                        const FrontDiagram st =
                            stabilize(d, s.owner, {s.time, s.time, s.slot, s.slot, {}}, StabilizeDirection::Stabilize);
                        // Components keep their labels; ids may be renumbered.
                        const ComponentId after = st.require_label(d.attr(s.owner).label);
                        const ClassicalInvariants before = classical_invariants(d, s.owner);
                        const ClassicalInvariants now = classical_invariants(st, after);
                        PROP_CHECK(now.tb - before.tb == -2, "tb change is not -2");
                        PROP_CHECK(now.rot == before.rot, "rot changed");
                        PROP_CHECK(euler(st) == euler(d), "stabilization changed chi");
                        const FrontDiagram back = stabilize(st, after, {s.time, s.time + 4, s.slot, s.slot, {}},
                                                            StabilizeDirection::Destabilize);
                        PROP_CHECK(back == d, "destabilize did not restore the diagram");
                        return true;
                      });
}

inline PropertyResult birth_cancel_inverse(std::uint64_t seed, int cases) {
  return run_property("birth then cancel is the identity; chi fixed", seed, cases, 0, 6,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const int e = uniform(rng, 0, static_cast<int>(d.events.size()));
                        const int gap = uniform(rng, 1, Trace(d).count(e) + 1);
                        const FrontDiagram b = birth_cancel_pair(d, {e, e, gap, gap, {}}, BirthDirection::Birth);
                        std::set<std::string> old;
                        for (const ComponentAttr& a : d.components) old.insert(a.label);
                        MoveSite refs;
                        for (const std::string prefix : {"U", "Y"})
                          for (ComponentId c = 1; c <= b.component_count(); ++c)
                            if (!old.count(b.attr(c).label) && b.attr(c).label.rfind(prefix, 0) == 0) refs.refs.push_back(c);
                        PROP_CHECK(refs.refs.size() == 2, "birth did not add one U and one Y component");
                        if (refs.refs.size() != 2) return true;
                        PROP_CHECK(euler(b) == euler(d), "birth changed chi");
                        const FrontDiagram back = birth_cancel_pair(b, refs, BirthDirection::Cancel);
                        PROP_CHECK(back == d, "cancel did not restore the diagram");
                        return true;
                      });
}

inline PropertyResult reidemeister_inverse(std::uint64_t seed, int cases) {
  return run_property("Reidemeister insert then reduce is the identity; chi fixed", seed, cases, 0, 6,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const bool r1 = uniform(rng, 0, 1) == 0;
                        const StrandPick s = r1 ? pick_minus_strand(rng, d, static_cast<int>(d.events.size()))
                                                : pick_pair(rng, d, static_cast<int>(d.events.size()));
                        if (!s.slot) return false;
                        const ReidemeisterMove move = r1 ? ReidemeisterMove::R1 : ReidemeisterMove::R2;
                        const auto variants = reidemeister_variants(move);
                        const std::string v =
                            variants[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(variants.size()) - 1))];
                        const LocalRule& rule = reidemeister_rule(move, v);
                        const int simple = static_cast<int>(rule.simple.size());
                        const int expanded = static_cast<int>(rule.expanded.size());
                        const MoveSite in{s.time, s.time + simple, s.slot, s.slot + rule.width - 1, {}};
                        FrontDiagram r;
                        try {
                          r = reidemeister(d, move, v, RewriteDirection::Insert, in);
                        } catch (const Error&) {
                          return false;  // the simple side of an R2 variant is not present here
                        }
                        PROP_CHECK(euler(r) == euler(d), "Reidemeister move changed chi");
                        const MoveSite out{s.time, s.time + expanded, s.slot, s.slot + rule.width - 1, {}};
                        PROP_CHECK(reidemeister(r, move, v, RewriteDirection::Reduce, out) == d,
                                   "reduction did not restore the diagram");
                        return true;
                      });
}

// Slot pair of crossing event j.
inline MoveSite crossing_site(const FrontDiagram& d, int j) {
  const int p = d.events[static_cast<std::size_t>(j)].position;
  return {j, j + 1, p, p + 1, {}};
}

inline int random_crossing(Rng& rng, const FrontDiagram& d) {
  std::vector<int> xs;
  for (int j = 0; j < static_cast<int>(d.events.size()); ++j)
    if (d.events[static_cast<std::size_t>(j)].kind == EventKind::Crossing) xs.push_back(j);
  if (xs.empty()) return -1;
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

inline PropertyResult crossing_change_twice(std::uint64_t seed, int cases) {
  return run_property("crossing change applied twice is the identity; chi fixed", seed, cases, 0, 6,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const int j = random_crossing(rng, d);
                        if (j < 0) return false;
                        MoveSite site = crossing_site(d, j);
                        const FrontDiagram once = crossing_change(d, site);
                        PROP_CHECK(euler(once) == euler(d), "crossing change changed chi");
                        const int grown = static_cast<int>(crossing_change_rule().expanded.size());
                        site.e1 = site.e0 + grown;
                        PROP_CHECK(crossing_change(once, site) == d, "second crossing change did not restore");
                        return true;
                      });
}

inline PropertyResult macro_matches_primitive(std::uint64_t seed, int cases) {
  return run_property("crossing-change macro equals the primitive", seed, cases, 0, 6,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const int j = random_crossing(rng, d);
                        if (j < 0) return false;
                        const MoveSite site = crossing_site(d, j);
                        const FrontDiagram primitive = crossing_change(d, site);
                        const MoveScript script = crossing_change_macro(d, site);
                        const FrontDiagram routed = run_script(script).final;
                        PROP_CHECK(routed.events == primitive.events, "macro word differs from the primitive");
                        PROP_CHECK(equivalent_up_to_normalization(routed, primitive),
                                   "macro is not equivalent to the primitive");
                        return true;
                      });
}

inline PropertyResult trivial_bypass_removes_pair(std::uint64_t seed, int cases) {
  return run_property("cancelling a trivial bypass removes two components; chi fixed", seed, cases, 0, 5,
                      [](Rng& rng, const FrontDiagram& d, std::vector<std::string>& failures) {
                        std::vector<ComponentId> minus;
                        for (ComponentId c = 1; c <= d.component_count(); ++c)
                          if (d.attr(c).coefficient == Coefficient::Minus) minus.push_back(c);
                        const ComponentId k = minus[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(minus.size()) - 1))];
                        ComponentAttr top;
                        top.coefficient = Coefficient::Plus;
                        top.node_plus = top.node_minus = true;
                        top.label = "B";
                        FrontDiagram pair = add_push_off(d, k, uniform(rng, 0, 1) == 0, top);
                        const ComponentId kk = pair.require_label(d.attr(k).label);
                        const ComponentId bb = pair.require_label("B");
                        pair.attr(bb).dashed_links = {kk};
                        const FrontDiagram out = cancel_trivial_bypass(pair, kk, bb);
                        PROP_CHECK(out.component_count() == pair.component_count() - 2, "component count did not drop by 2");
                        PROP_CHECK(euler(out) == euler(pair), "cancellation changed chi");
                        return true;
                      });
}

inline PropertyResult normalize_idempotent(std::uint64_t seed, int cases) {
  return run_property("normalize is idempotent and keeps chi", seed, cases, 0, 6,
                      [](Rng&, const FrontDiagram& d, std::vector<std::string>& failures) {
                        const FrontDiagram n = normalize(d);
                        PROP_CHECK(normalize(n) == n, "normalize is not idempotent");
                        PROP_CHECK(euler(n) == euler(d), "normalize changed chi");
                        return true;
                      });
}

// Each growth move on a spun diagram keeps the word mirror-symmetric and valid.
inline PropertyResult spin_symmetry(int spin, std::uint64_t seed, int cases) {
  PropertyResult out;
  out.name = "moves on spin " + std::to_string(spin) + " diagrams keep the mirror symmetry";
  Rng rng(seed);
  FrontDiagram d = seed_unknot(spin);
  std::vector<std::string>& failures = out.failures;
  while (out.cases < cases && out.attempts < 50 * cases && failures.size() <= 5) {
    ++out.attempts;
    if (d.events.size() > 40) d = seed_unknot(spin);
    if (!grow_once(rng, d)) continue;
    ++out.cases;
    PROP_CHECK(check_spin_symmetry(d), "word lost its mirror symmetry");
    PROP_CHECK(validate_diagram(d).empty(), "diagram became invalid");
  }
  if (out.cases < cases) failures.push_back("only " + std::to_string(out.cases) + " applicable cases");
  return out;
}

inline DiskBandSurface random_surface(Rng& rng) {
  DiskBandSurface s;
  const int disks = uniform(rng, 1, 3);
  for (int i = 0; i < disks; ++i) s.disks.push_back("D" + std::to_string(i));
  s.order.assign(static_cast<std::size_t>(disks), {});
  const int bands = uniform(rng, 1, 5);
  for (int b = 0; b < bands; ++b) {
    Band band;
    band.id = "b" + std::to_string(b);
    band.a.disk = uniform(rng, 0, disks - 1);
    band.b.disk = b < disks - 1 ? b + 1 : uniform(rng, 0, disks - 1);  // keeps the first disks chained
    if (b < disks - 1) band.a.disk = b;
    band.a.slot = 2 * b;
    band.b.slot = 2 * b + 1;
    band.half_twists = uniform(rng, 0, 3) == 0 ? 1 : 0;
    s.bands.push_back(band);
    for (const Foot& f : {band.a, band.b}) {
      auto& order = s.order[static_cast<std::size_t>(f.disk)];
      order.insert(order.begin() + uniform(rng, 0, static_cast<int>(order.size())), f.slot);
    }
  }
  return s;
}

inline PropertyResult ribbon_transpose(std::uint64_t seed, int cases) {
  PropertyResult out;
  out.name = "clasp transposition is an involution and keeps chi";
  Rng rng(seed);
  while (out.cases < cases && out.failures.size() <= 5) {
    ++out.attempts;
    const DiskBandSurface s = random_surface(rng);
    const int disk = uniform(rng, 0, static_cast<int>(s.disks.size()) - 1);
    const int feet = static_cast<int>(s.order[static_cast<std::size_t>(disk)].size());
    if (feet < 2) continue;
    const int at = uniform(rng, 0, feet - 1);
    ++out.cases;
    const DiskBandSurface t = clasp_transpose(s, disk, at);
    if (!(clasp_transpose(t, disk, at) == s)) out.failures.push_back(serialize_ribbon(s) + ": not an involution");
    if (surface_invariants(t).euler != surface_invariants(s).euler)
      out.failures.push_back(serialize_ribbon(s) + ": chi changed");
  }
  return out;
}

#undef PROP_CHECK

inline std::vector<PropertyResult> run_all(std::uint64_t seed, int cases) {
  return {clasp_inverse(seed, cases),
          stabilize_inverse(seed + 1, cases),
          birth_cancel_inverse(seed + 2, cases),
          reidemeister_inverse(seed + 3, cases),
          crossing_change_twice(seed + 4, cases),
          macro_matches_primitive(seed + 5, cases),
          trivial_bypass_removes_pair(seed + 6, cases),
          normalize_idempotent(seed + 7, cases),
          spin_symmetry(1, seed + 8, cases),
          spin_symmetry(2, seed + 9, cases),
          ribbon_transpose(seed + 10, cases)};
}

}  // namespace props
