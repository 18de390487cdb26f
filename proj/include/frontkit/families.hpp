#pragma once

#include "frontkit/diagram.hpp"

namespace fk {

// Expected classical invariants of the 2-handle curve of the disk bundle
// W(k, m): tb = 1 - 2(k+1+m), rot = 2k.
struct FamilyInvariants {
  int tb = 0;
  int rot = 0;
};
FamilyInvariants cieliebak_expected(int k, int m);

// Legendrian unknot realizing cieliebak_expected(k, m): the standard unknot
// with 2k+m rot-raising and m rot-lowering zigzags on its upper strand,
// carrying a (-1) coefficient and label "K". Throws a precondition error when
// 2k+m < 0 or m < 0, since no Legendrian unknot has tb + |rot| > -1.
FrontDiagram cieliebak_front(int k, int m);

}  // namespace fk
