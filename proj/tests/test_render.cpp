#include <string>

#include "doctest.h"
#include "frontkit/front_io.hpp"
#include "frontkit/render.hpp"

using namespace fk;

namespace {

int occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

int crossings(const FrontDiagram& d) {
  int n = 0;
  for (const Event& e : d.events) n += e.kind == EventKind::Crossing;
  return n;
}

const std::string data_dir = FRONTKIT_DATA_DIR;
const std::string golden_dir = FRONTKIT_GOLDEN_DIR;

}  // namespace

TEST_CASE("rendering matches the stored drawing") {
  const std::string svg = render_svg(load_front(data_dir + "/fronts/mazur.front"));
  CHECK(svg == read_text_file(golden_dir + "/mazur.svg"));
}

TEST_CASE("one path per component and one gap per crossing") {
  for (const char* name : {"example-2-1", "hopf-clasp", "mazur", "stabilized-unknot", "unknot"}) {
    CAPTURE(name);
    const FrontDiagram d = load_front(data_dir + "/fronts/" + name + ".front");
    const std::string svg = render_svg(d);
    CHECK(occurrences(svg, "<path class=\"component") == d.component_count());
    CHECK(occurrences(svg, "class=\"gap\"") == crossings(d));
    CHECK(occurrences(svg, "class=\"axis\"") == 0);
  }
}

TEST_CASE("spun fronts draw the axis and escape labels") {
  FrontDiagram d = make_diagram("a<b", 1, 0, parse_word("L1 X1 R1"));
  d.attr(1).label = "K&1";
  const std::string svg = render_svg(d);
  CHECK(occurrences(svg, "class=\"axis\"") == 1);
  CHECK(svg.find("a&lt;b") != std::string::npos);
  CHECK(svg.find("K&amp;1") != std::string::npos);
  CHECK(svg.find("K&1") == std::string::npos);
}
