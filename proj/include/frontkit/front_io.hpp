#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frontkit/diagram.hpp"

namespace fk {

// Parses `.front` text and validates the result; throws ParseError (with
// line/column) or Error(Validation).
FrontDiagram parse_front(std::string_view text);

// Canonical text: one event per line, components in trace order with anchors.
std::string serialize_front(const FrontDiagram& d);

// A diagram over `events` whose traced components all get default attributes.
FrontDiagram make_diagram(std::string name, int spin, int left_count, std::vector<Event> events);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
FrontDiagram load_front(const std::string& path);

}  // namespace fk
