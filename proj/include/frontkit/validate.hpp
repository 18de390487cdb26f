#pragma once

#include <string>
#include <vector>

#include "frontkit/diagram.hpp"

namespace fk {

struct Violation {
  std::string code;  // replay, right-count, closed, spin-symmetry, components, labels, dashed-target, decoration
  std::string message;
};

std::vector<Violation> validate_diagram(const FrontDiagram& d);

// True iff the word equals its mirror and the wall counts agree.
bool check_spin_symmetry(const FrontDiagram& d);

// Left-right mirror of the whole diagram; attributes follow their components
// and orientations are reversed so signed data is carried along.
FrontDiagram mirror_diagram(const FrontDiagram& d);

// Throws Error(Validation) with the first violation.
void require_valid(const FrontDiagram& d);

}  // namespace fk
