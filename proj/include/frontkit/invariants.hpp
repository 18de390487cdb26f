#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frontkit/diagram.hpp"
#include "frontkit/trace.hpp"

namespace fk {

struct ClassicalInvariants {
  int tb = 0;
  int rot = 0;
  int writhe = 0;
  int left_cusps = 0;
  int right_cusps = 0;
  int up_cusps = 0;
  int down_cusps = 0;
};

// Signed crossing data of one event word, using component orientations.
// A crossing is positive when both strands run the same x-direction.
class CrossingData {
 public:
  explicit CrossingData(const FrontDiagram& d);
  const Trace& trace() const { return trace_; }
  int writhe(ComponentId c) const;
  // Sum of crossing signs between two distinct components.
  int signed_crossings(ComponentId a, ComponentId b) const;
  int crossings_between(ComponentId a, ComponentId b) const;
  int self_crossings(ComponentId c) const;
  // +1 if the oriented traversal crosses segment n rightward.
  int oriented_direction(Node n) const;

 private:
  std::vector<Orientation> orientation_;
  Trace trace_;
  std::map<std::pair<ComponentId, ComponentId>, std::pair<int, int>> pairs_;  // (sign sum, count)
};

ClassicalInvariants classical_invariants(const FrontDiagram& d, ComponentId c);

// Linking number of two closed components (half the signed inter-component crossings).
int linking_number(const FrontDiagram& d, ComponentId a, ComponentId b);

struct HandleCensus {
  std::map<int, int> counts;  // handle index -> count, including the 0-handle
  int euler = 1;
};
HandleCensus handle_census(const FrontDiagram& d);

struct LinkingData {
  std::vector<ComponentId> minus_components;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<ComponentId> plus_unknots;
  std::vector<std::vector<int>> over_ones;  // [minus index][plus index] geometric passes
};
LinkingData linking_matrix(const FrontDiagram& d);

// Invariant factors (d_i > 1, then 0 for each free summand) of the cokernel of
// a square integer matrix.
std::vector<std::int64_t> smith_invariant_factors(std::vector<std::vector<std::int64_t>> m);

// H1 of the surgered boundary: every surgery component gives a generator,
// framing tb-1 for (-1) and tb+1 for (+1), off-diagonal linking numbers.
std::vector<std::vector<std::int64_t>> surgery_matrix(const FrontDiagram& d);
std::vector<std::int64_t> homology_presentation(const FrontDiagram& d);

}  // namespace fk
