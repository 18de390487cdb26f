#include "frontkit/families.hpp"

#include <string>

#include "frontkit/error.hpp"
#include "frontkit/front_io.hpp"

namespace fk {

FamilyInvariants cieliebak_expected(int k, int m) { return {1 - 2 * (k + 1 + m), 2 * k}; }

FrontDiagram cieliebak_front(int k, int m) {
  const int raising = 2 * k + m;
  if (m < 0 || raising < 0) {
    const FamilyInvariants want = cieliebak_expected(k, m);
    fail_precondition("cieliebak(" + std::to_string(k) + "," + std::to_string(m) + "): tb " + std::to_string(want.tb) +
                      " and rot " + std::to_string(want.rot) + " violate tb + |rot| <= -1 for a Legendrian unknot");
  }
  std::vector<Event> word{left_cusp(1)};
  for (int i = 0; i < raising; ++i) word.insert(word.end(), {left_cusp(3), right_cusp(2)});
  for (int i = 0; i < m; ++i) word.insert(word.end(), {left_cusp(2), right_cusp(3)});
  word.push_back(right_cusp(1));
  FrontDiagram d = make_diagram("cieliebak-" + std::to_string(k) + "-" + std::to_string(m), 0, 0, std::move(word));
  d.attr(1).coefficient = Coefficient::Minus;
  d.attr(1).label = "K";
  return d;
}

}  // namespace fk
