#include <string>

#include "doctest.h"
#include "frontkit/error.hpp"
#include "frontkit/front_io.hpp"
#include "frontkit/trace.hpp"
#include "frontkit/validate.hpp"
#include "frontkit/word.hpp"

using namespace fk;

namespace {

FrontDiagram word_diagram(const char* word, int spin = 0, int left = 0) {
  return make_diagram("w", spin, left, parse_word(word));
}

}  // namespace

TEST_CASE("minimal closed front parses") {
  FrontDiagram d = parse_front("diagram u; spin 0; left 0; events L1 R1 end");
  CHECK(d.events.size() == 2);
  CHECK(d.component_count() == 1);
  CHECK(d.right_count() == 0);
  CHECK(d.closed());
}

TEST_CASE("replay rejects a crossing without strands") {
  try {
    parse_front("diagram bad; spin 0; left 0; events X1 end");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
    CHECK(std::string(e.what()).find("Crossing at position 1 with 0 strands") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_front("diagram a\nspin 0\nleft 0\nevents\nL 1\nQ 2\nend\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_front("diagram a; events L1 R1"), ParseError);
  CHECK_THROWS_AS(parse_front("diagram a; events L1 R1 end; component k dashed nope"), ParseError);
}

TEST_CASE("zigzag unknot with a minus coefficient") {
  FrontDiagram d = parse_front(
      "diagram z\nspin 0\nleft 0\nevents\nL 1\nL 1\nR 2\nL 2\nR 1\nR 1\nend\ncomponent K coeff -1\n");
  CHECK(d.component_count() == 1);
  CHECK(d.attr(1).coefficient == Coefficient::Minus);
  CHECK(d.attr(1).label == "K");
}

TEST_CASE("serialization is canonical and round-trips") {
  const char* text =
      "diagram two\nspin 0\nleft 0\nevents L1 L2 R2 R1 end\n"
      "component inner at 2:2 coeff -1\ncomponent outer at 1:1 coeff +1 node+ node- dashed inner\n";
  FrontDiagram d = parse_front(text);
  REQUIRE(d.component_count() == 2);
  CHECK(d.attr(1).label == "outer");
  CHECK(d.attr(2).label == "inner");
  std::string s = serialize_front(d);
  CHECK(s.find("component outer") < s.find("component inner"));
  FrontDiagram again = parse_front(s);
  CHECK(again == d);
  CHECK(serialize_front(again) == s);
}

TEST_CASE("component tracing") {
  SUBCASE("unknot") {
    Trace tr(0, parse_word("L1 R1"));
    REQUIRE(tr.component_count() == 1);
    CHECK(tr.path(1).closed);
    CHECK(tr.path(1).nodes.size() == 2);
  }
  SUBCASE("nested unknots") {
    Trace tr(0, parse_word("L1 L2 R2 R1"));
    CHECK(tr.component_count() == 2);
  }
  SUBCASE("clasped two-strand chart") {
    FrontDiagram d = word_diagram("X1 X1", 0, 2);
    Trace tr(d);
    REQUIRE(tr.component_count() == 2);
    CHECK_FALSE(tr.path(1).closed);
    CHECK_FALSE(tr.path(2).closed);
    for (int j = 0; j < 2; ++j) CHECK(tr.event_components(j).size() == 2);
  }
  SUBCASE("each segment has exactly one owner") {
    Trace tr(0, parse_word("L1 L3 X2 X2 R3 R1"));
    int total = 0;
    for (const auto& p : tr.paths()) total += static_cast<int>(p.nodes.size());
    int segments = 0;
    for (int c : tr.counts()) segments += c;
    CHECK(total == segments);
  }
}

TEST_CASE("spin symmetry") {
  CHECK(check_spin_symmetry(word_diagram("L1 R1", 1)));
  CHECK(check_spin_symmetry(word_diagram("L1 X1 R1", 1)));
  CHECK_FALSE(check_spin_symmetry(word_diagram("L1 L2 R2 X1 R1")));
  FrontDiagram bad = word_diagram("L1 L2 R2 X1 R1");
  bad.spin = 1;
  auto v = validate_diagram(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "spin-symmetry");
}

TEST_CASE("decoration validation") {
  FrontDiagram d = word_diagram("L1 L2 R2 R1");
  CHECK(validate_diagram(d).empty());
  d.attr(1).dashed_links = {2};
  auto v = validate_diagram(d);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "dashed-target");
  d.attr(2).coefficient = Coefficient::Minus;
  CHECK(validate_diagram(d).empty());
}

TEST_CASE("mirror is an involution") {
  FrontDiagram d = parse_front(
      "diagram m; spin 0; left 0; events L1 L3 X2 X2 R3 R1 end; component a coeff -1; component b coeff +1 node+ "
      "node- dashed a");
  FrontDiagram mm = mirror_diagram(mirror_diagram(d));
  CHECK(mm == d);
}

TEST_CASE("commutation of far-apart events") {
  auto r = commute(left_cusp(1), crossing(3));
  REQUIRE(r);
  CHECK(r->first == crossing(1));
  CHECK(r->second == left_cusp(1));
  CHECK_FALSE(commute(left_cusp(1), crossing(2)));
  CHECK_FALSE(commute(crossing(1), crossing(2)));
  auto s = commute(crossing(3), right_cusp(1));
  REQUIRE(s);
  CHECK(s->first == right_cusp(1));
  CHECK(s->second == crossing(1));
}

TEST_CASE("canonical word identifies commutation classes") {
  // Two stacked unknots born and killed in either order.
  const auto stacked = canonical_word(parse_word("L1 L1 R1 R1"));
  CHECK(canonical_word(parse_word("L1 L3 R1 R1")) == stacked);
  CHECK(canonical_word(parse_word("L1 L1 R3 R1")) == stacked);
  CHECK(canonical_word(parse_word("L1 L2 R2 R1")) != stacked);
}

TEST_CASE("push-off of the unknot") {
  Trace tr(0, parse_word("L1 R1"));
  PushOff up = push_off(tr, parse_word("L1 R1"), 1, true, false);
  CHECK(to_string(up.events) == "L1 L3 X2 X2 R3 R1");
  PushOff down = push_off(tr, parse_word("L1 R1"), 1, false, false);
  CHECK(to_string(down.events) == "L1 L3 X2 X2 R3 R1");
  Trace t2(0, up.events);
  CHECK(t2.component_count() == 2);
}

TEST_CASE("deleting a component") {
  Trace tr(0, parse_word("L1 L3 X2 X2 R3 R1"));
  Rebuilt r = delete_components(tr, parse_word("L1 L3 X2 X2 R3 R1"), {2});
  CHECK(to_string(r.events) == "L1 R1");
}

TEST_CASE("vertical flip") {
  CHECK(to_string(flip_vertical(0, parse_word("L1 L1 R2 R1"))) == "L1 L3 R2 R1");
  auto w = parse_word("L1 L3 X2 X1 R2 R1");
  CHECK(flip_vertical(0, flip_vertical(0, w)) == w);
}
