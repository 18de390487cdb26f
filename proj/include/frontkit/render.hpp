#pragma once

#include <string>

#include "frontkit/diagram.hpp"

namespace fk {

// SVG drawing of a front: one <path> per component (classes "component",
// "plus", "minus" or "plain"), a class="gap" mark on the back strand of each
// crossing, coefficient labels, node markers, dashed links, and a dashed
// class="axis" line when spin > 0. Output is deterministic.
std::string render_svg(const FrontDiagram& d);

}  // namespace fk
