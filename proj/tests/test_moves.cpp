#include <string>

#include "doctest.h"
#include "frontkit/error.hpp"
#include "frontkit/front_io.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/moves.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/validate.hpp"
#include "frontkit/word.hpp"

using namespace fk;

namespace {

FrontDiagram word_diagram(const char* word, int spin = 0, int left = 0) {
  return make_diagram("w", spin, left, parse_word(word));
}

FrontDiagram minus_unknot() {
  FrontDiagram d = word_diagram("L1 R1");
  d.attr(1).coefficient = Coefficient::Minus;
  d.attr(1).label = "K";
  return d;
}

// (-1)-unknot K plus its Reeb push-off carrying both nodes and a dashed link to K.
FrontDiagram bypass_pair(const FrontDiagram& base, const std::string& n_label, bool above) {
  ComponentAttr top;
  top.coefficient = Coefficient::Plus;
  top.node_plus = top.node_minus = true;
  top.label = "B";
  FrontDiagram d = add_push_off(base, base.require_label(n_label), above, top);
  d.attr(d.require_label("B")).dashed_links = {d.require_label(n_label)};
  require_valid(d);
  return d;
}

std::string precondition_message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    return e.what();
  }
  FAIL("expected a precondition error");
  return {};
}

}  // namespace

TEST_CASE("site syntax") {
  MoveSite s = parse_site("3..5/2..4");
  CHECK(s.e0 == 3);
  CHECK(s.e1 == 5);
  CHECK(s.s0 == 2);
  CHECK(s.s1 == 4);
  CHECK(to_string(s) == "3..5/2..4");
  CHECK(parse_site("2/1..2") == MoveSite{2, 2, 1, 2, {}});
  CHECK_THROWS_AS(parse_site("2..x/1"), Error);
}

TEST_CASE("classical invariants of small fronts") {
  FrontDiagram u = minus_unknot();
  ClassicalInvariants ci = classical_invariants(u, 1);
  CHECK(ci.tb == -1);
  CHECK(ci.rot == 0);
  FrontDiagram s = stabilize(u, 1, parse_site("1/1"), StabilizeDirection::Stabilize);
  CHECK(to_string(s.events) == "L1 L1 R2 L2 R1 R1");
  ClassicalInvariants cs = classical_invariants(s, 1);
  CHECK(cs.tb == -3);
  CHECK(cs.rot == 0);
  CHECK(cs.up_cusps + cs.down_cusps == cs.left_cusps + cs.right_cusps);
  FrontDiagram hopf = word_diagram("L1 L3 X2 X2 R3 R1");
  CHECK(std::abs(linking_number(hopf, 1, 2)) == 1);
  CHECK(classical_invariants(hopf, 1).tb == -1);
  CHECK_THROWS_AS(classical_invariants(word_diagram("L1 R1", 1), 1), Error);
}

TEST_CASE("linking matrix and homology") {
  FrontDiagram u = minus_unknot();
  LinkingData ld = linking_matrix(u);
  REQUIRE(ld.matrix.size() == 1);
  CHECK(ld.matrix[0][0] == -2);
  CHECK(homology_presentation(u) == std::vector<std::int64_t>{2});
  CHECK(homology_presentation(FrontDiagram{}).empty());
  FrontDiagram split = word_diagram("L1 L3 R3 R1");
  split.attr(1).coefficient = split.attr(2).coefficient = Coefficient::Minus;
  LinkingData two = linking_matrix(split);
  CHECK(two.matrix == std::vector<std::vector<std::int64_t>>{{-2, 0}, {0, -2}});
  CHECK(smith_invariant_factors({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{6});
  CHECK(smith_invariant_factors({{0, 0}, {0, 4}}) == std::vector<std::int64_t>{4, 0});
}

TEST_CASE("handle census") {
  HandleCensus empty = handle_census(FrontDiagram{});
  CHECK(empty.euler == 1);
  CHECK(empty.counts.at(0) == 1);
  FrontDiagram d = bypass_pair(minus_unknot(), "K", true);
  HandleCensus c = handle_census(d);
  CHECK(c.counts.at(2) == 1);
  CHECK(c.counts.at(3) == 1);
  CHECK(c.euler == 1);
  d.attr(d.require_label("B")).node_minus = false;
  CHECK_THROWS_AS(handle_census(d), Error);
}

TEST_CASE("clasp and unclasp are inverse") {
  FrontDiagram d = word_diagram("L1 L3 R3 R1");
  FrontDiagram c = clasp(d, parse_site("2/2..3"), ClaspDirection::Clasp);
  CHECK(to_string(c.events) == "L1 L3 X2 X2 R3 R1");
  FrontDiagram back = clasp(c, parse_site("2..4/2..3"), ClaspDirection::Unclasp);
  CHECK(back == d);
  CHECK_THROWS_AS(clasp(d, parse_site("1..3/1..2"), ClaspDirection::Unclasp), Error);
  // Same component: writhe changes by two.
  FrontDiagram u = word_diagram("L1 R1");
  FrontDiagram self = clasp(u, parse_site("1/1..2"), ClaspDirection::Clasp);
  CHECK(self.component_count() == 1);
  CHECK(std::abs(CrossingData(self).writhe(1) - CrossingData(u).writhe(1)) == 2);
}

TEST_CASE("stabilization inverse and spin symmetry") {
  FrontDiagram u = minus_unknot();
  FrontDiagram s = stabilize(u, 1, parse_site("1/1"), StabilizeDirection::Stabilize);
  CHECK(stabilize(s, 1, parse_site("1..5/1"), StabilizeDirection::Destabilize) == u);
  std::string msg = precondition_message([&] { stabilize(s, 1, parse_site("2..6/1"), StabilizeDirection::Destabilize); });
  CHECK(msg.find("template mismatch") != std::string::npos);
  FrontDiagram spun = word_diagram("L1 R1", 1);
  FrontDiagram twisted = word_diagram("L1 X1 R1", 1);
  FrontDiagram ss = stabilize(twisted, 1, parse_site("1/1"), StabilizeDirection::Stabilize);
  CHECK(check_spin_symmetry(ss));
  CHECK(ss.events.size() == 11);
  FrontDiagram central = stabilize(spun, 1, parse_site("1/1"), StabilizeDirection::Stabilize);
  CHECK(check_spin_symmetry(central));
  CHECK(central.events.size() == 6);
}

TEST_CASE("crossing change: primitive twice and the macro route") {
  FrontDiagram hopf = word_diagram("L1 L3 X2 X2 R3 R1");
  FrontDiagram once = crossing_change(hopf, parse_site("2..3/2..3"));
  CHECK(to_string(once.events) == "L1 L3 L2 R3 L4 X3 R2 X2 R3 R1");
  CHECK(crossing_change(once, parse_site("2..7/2..3")) == hopf);
  CHECK(linking_number(once, 1, 2) == 0);
  CHECK_THROWS_AS(crossing_change(word_diagram("L1 X1 R1", 1), parse_site("1..2/1..2")), Error);

  // Stabilize, R2, commute, unclasp lands on the primitive output exactly.
  const int e = 2, p = 2;
  FrontDiagram m = stabilize(hopf, 1, {e, e, p, p, {}}, StabilizeDirection::Stabilize);
  m = reidemeister(m, ReidemeisterMove::R2, "left-above", RewriteDirection::Insert, {e + 2, e + 3, p + 1, p + 1, {}});
  m = commute_at(m, e + 4);
  m = clasp(m, {e + 5, e + 7, p, p + 1, {}}, ClaspDirection::Unclasp);
  CHECK(m.events == once.events);
  CHECK(equivalent_up_to_normalization(m, once));
}

TEST_CASE("Reidemeister templates") {
  FrontDiagram u = word_diagram("L1 R1");
  FrontDiagram r1 = reidemeister(u, ReidemeisterMove::R1, "up", RewriteDirection::Insert, parse_site("1/1"));
  CHECK(r1.events.size() == 5);
  CHECK(reidemeister(r1, ReidemeisterMove::R1, "up", RewriteDirection::Reduce, parse_site("1..4/1")) == u);
  for (const std::string& v : reidemeister_variants(ReidemeisterMove::R2)) {
    const LocalRule& rule = reidemeister_rule(ReidemeisterMove::R2, v);
    CHECK(rule.expanded.size() == rule.simple.size() + 2);
  }
  FrontDiagram stacked = word_diagram("L1 L1 R1 R1");
  FrontDiagram r2 =
      reidemeister(stacked, ReidemeisterMove::R2, "left-above", RewriteDirection::Insert, parse_site("1..2/1"));
  CHECK(to_string(r2.events) == "L1 L2 X1 X2 R1 R1");
  CHECK(reidemeister(r2, ReidemeisterMove::R2, "left-above", RewriteDirection::Reduce, parse_site("1..4/1")) ==
        stacked);
  CHECK(normalize(r2) == stacked);
  FrontDiagram braid = word_diagram("X1 X2 X1", 0, 3);
  FrontDiagram r3 = reidemeister(braid, ReidemeisterMove::R3, "braid", RewriteDirection::Insert, parse_site("0..3/1..3"));
  CHECK(to_string(r3.events) == "X2 X1 X2");
  braid.attr(2).node_plus = true;
  braid.attr(2).coefficient = Coefficient::Plus;
  braid.attr(2).node_minus = true;
  std::string msg = precondition_message(
      [&] { reidemeister(braid, ReidemeisterMove::R3, "braid", RewriteDirection::Insert, parse_site("0..3/1..3")); });
  CHECK(msg.find("node") != std::string::npos);
}

TEST_CASE("uplus merges and depends on order") {
  FrontDiagram d = word_diagram("L1 L3 R3 R1");
  d.attr(1).label = "a";
  d.attr(2).label = "b";
  d.attr(2).coefficient = Coefficient::Minus;
  FrontDiagram ab = uplus(d, 1, 2, parse_site("2/2..3"));
  CHECK(ab.component_count() == 1);
  CHECK(ab.attr(1).label == "a");
  CHECK(ab.attr(1).coefficient == Coefficient::Minus);
  CHECK(ab.events.size() == d.events.size() + 2);
  FrontDiagram ba = uplus(d, 2, 1, parse_site("2/2..3"));
  CHECK(ba.component_count() == 1);
  CHECK_FALSE(equivalent_up_to_normalization(ab, ba));
  CHECK_THROWS_AS(uplus(d, 1, 2, parse_site("2/1..3")), Error);
  d.attr(1).coefficient = Coefficient::Plus;
  CHECK_THROWS_AS(uplus(d, 1, 2, parse_site("2/2..3")), Error);
}

TEST_CASE("handleslide forward and undo") {
  FrontDiagram d = word_diagram("L1 L3 R3 R1");
  d.attr(1).label = "K";
  d.attr(2).label = "Y";
  d.attr(2).coefficient = Coefficient::Minus;
  const MoveSite site = parse_site("2/2..3");
  for (SlideVariant v : {SlideVariant::MinusUp, SlideVariant::PlusUp}) {
    FrontDiagram over = d;
    if (v == SlideVariant::PlusUp) over.attr(2).coefficient = Coefficient::Plus;
    FrontDiagram slid = handleslide(over, 1, 2, v, site);
    CHECK(slid.component_count() == 2);
    CHECK(slid.attr(slid.require_label("K")).coefficient == Coefficient::None);
    MoveSite pattern = slide_pattern_site(over, 1, 2, v, site);
    const SlideVariant back = v == SlideVariant::MinusUp ? SlideVariant::MinusDown : SlideVariant::PlusDown;
    FrontDiagram undone =
        handleslide(slid, slid.require_label("K"), slid.require_label("Y"), back, pattern);
    CHECK(equivalent_up_to_normalization(undone, over));
    CHECK(canonical_word(undone.events) == canonical_word(over.events));
  }
  std::string msg = precondition_message([&] { handleslide(d, 1, 2, SlideVariant::PlusUp, site); });
  CHECK(msg.find("coefficient mismatch") != std::string::npos);
  msg = precondition_message([&] { handleslide(d, 1, 2, SlideVariant::MinusDown, site); });
  CHECK(msg.find("position mismatch") != std::string::npos);
}

TEST_CASE("decorated slide over a (-1) handle gains a dashed link") {
  FrontDiagram d = word_diagram("L1 L3 R3 R1");
  d.attr(1).label = "K";
  d.attr(1).coefficient = Coefficient::Plus;
  d.attr(1).node_plus = d.attr(1).node_minus = true;
  d.attr(2).label = "Y";
  d.attr(2).coefficient = Coefficient::Minus;
  FrontDiagram slid = handleslide(d, 1, 2, SlideVariant::MinusUp, parse_site("2/2..3"));
  const ComponentAttr& k = slid.attr(slid.require_label("K"));
  CHECK(k.dashed_links == std::vector<ComponentId>{slid.require_label("Y")});
}

TEST_CASE("birth and cancel") {
  FrontDiagram u = minus_unknot();
  FrontDiagram b = birth_cancel_pair(u, parse_site("2/1"), BirthDirection::Birth);
  CHECK(to_string(b.events) == "L1 R1 L1 L2 X1 X1 R2 R1");
  CHECK(handle_census(b).euler == handle_census(u).euler);
  MoveSite refs;
  refs.refs = {b.require_label("U1"), b.require_label("Y1")};
  FrontDiagram c = birth_cancel_pair(b, refs, BirthDirection::Cancel);
  CHECK(c == u);
  // A partner crossing the unknot four times is refused.
  FrontDiagram twice = clasp(b, parse_site("4/3..4"), ClaspDirection::Clasp);
  refs.refs = {twice.require_label("U1"), twice.require_label("Y1")};
  std::string msg = precondition_message([&] { birth_cancel_pair(twice, refs, BirthDirection::Cancel); });
  CHECK(msg.find("geometric linking") != std::string::npos);
}

TEST_CASE("trivial bypass cancellation") {
  FrontDiagram tb1 = bypass_pair(minus_unknot(), "K", true);
  CHECK(to_string(tb1.events) == "L1 L3 X2 X2 R3 R1");
  CHECK(handle_census(tb1).euler == 1);
  FrontDiagram empty = cancel_trivial_bypass(tb1, tb1.require_label("K"), tb1.require_label("B"));
  CHECK(empty.events.empty());
  CHECK(empty.component_count() == 0);
  CHECK(handle_census(empty).euler == 1);

  FrontDiagram tb2 = flip_vertical(tb1);
  CHECK(cancel_trivial_bypass(tb2, tb2.require_label("K"), tb2.require_label("B")).events.empty());

  // On a stabilized knot the two push-offs differ, so the kinds separate.
  FrontDiagram zig = stabilize(minus_unknot(), 1, parse_site("1/1"), StabilizeDirection::Stabilize);
  FrontDiagram up = bypass_pair(zig, "K", true);
  FrontDiagram down = bypass_pair(zig, "K", false);
  CHECK(classify_trivial_bypass(up, up.require_label("K"), up.require_label("B")) == TrivialBypassKind::TB1);
  CHECK(classify_trivial_bypass(down, down.require_label("K"), down.require_label("B")) == TrivialBypassKind::TB2);
  FrontDiagram flipped = flip_vertical(up);
  CHECK(classify_trivial_bypass(flipped, flipped.require_label("K"), flipped.require_label("B")) ==
        TrivialBypassKind::TB2);

  FrontDiagram broken = tb1;
  broken.attr(broken.require_label("B")).node_minus = false;
  std::string msg = precondition_message(
      [&] { cancel_trivial_bypass(broken, broken.require_label("K"), broken.require_label("B")); });
  CHECK(msg.find("(n+1)-handle convention") != std::string::npos);
}

TEST_CASE("normalize") {
  FrontDiagram u = minus_unknot();
  CHECK(normalize(u) == u);
  FrontDiagram fish = reidemeister(u, ReidemeisterMove::R1, "down", RewriteDirection::Insert, parse_site("1/1"));
  fish = reidemeister(fish, ReidemeisterMove::R2, "left-above", RewriteDirection::Insert, parse_site("1..2/1"));
  FrontDiagram n = normalize(fish);
  CHECK(to_string(fish.events) == "L1 L2 X1 X2 X2 R1 R1");
  // Two fishtail readings exist; the surviving strands may carry either orientation.
  CHECK(n.events == u.events);
  CHECK(n.attr(1).coefficient == Coefficient::Minus);
  CHECK(normalize(n) == n);
  FrontDiagram spun = word_diagram("L1 R1", 1);
  FrontDiagram wide = reidemeister(spun, ReidemeisterMove::R1, "up", RewriteDirection::Insert, parse_site("1/1"));
  CHECK(check_spin_symmetry(wide));
  CHECK(normalize(wide).events == spun.events);
}
