#include <random>

#include "doctest.h"
#include "frontkit/error.hpp"
#include "frontkit/families.hpp"
#include "frontkit/framing.hpp"
#include "frontkit/invariants.hpp"
#include "frontkit/moves.hpp"
#include "oracles.hpp"

using namespace fk;

TEST_CASE("disk bundle family") {
  for (int k = -1; k <= 2; ++k)
    for (int m = 1; m <= 4; ++m) {
      if (2 * k + m < 0) continue;
      CAPTURE(k);
      CAPTURE(m);
      const FrontDiagram d = cieliebak_front(k, m);
      const ClassicalInvariants ci = classical_invariants(d, 1);
      CHECK(ci.tb == 1 - 2 * (k + 1 + m));
      CHECK(ci.rot == 2 * k);
      CHECK(linking_matrix(d).matrix == std::vector<std::vector<std::int64_t>>{{-2 * (k + 1 + m)}});
      CHECK(handle_census(d).euler == 2);
    }
  const ClassicalInvariants ci = classical_invariants(cieliebak_front(1, 2), 1);
  CHECK(ci.tb == -7);
  CHECK(ci.rot == 2);
  CHECK(linking_matrix(cieliebak_front(0, 1)).matrix[0][0] == -4);
  CHECK_THROWS_AS(cieliebak_front(-1, 1), Error);
  CHECK_THROWS_AS(cieliebak_front(-2, 3), Error);
}

TEST_CASE("one stabilization moves m to m+1") {
  for (int k = 0; k <= 1; ++k) {
    FrontDiagram d = cieliebak_front(k, 1);
    FrontDiagram s = stabilize(d, 1, MoveSite{1, 1, 1, 1, {}}, StabilizeDirection::Stabilize);
    const ClassicalInvariants got = classical_invariants(s, 1);
    const FamilyInvariants want = cieliebak_expected(k, 2);
    CHECK(got.tb == want.tb);
    CHECK(got.rot == want.rot);
  }
}

TEST_CASE("framing maps") {
  Eigen::VectorXd p(1);
  p << 1.0;
  const Eigen::MatrixXd half_turn = framing_loop(p, std::acos(-1.0) / 2);
  CHECK((half_turn + Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  for (int n = 2; n <= 8; ++n) {
    const FramingReport r = framing_map_check(n, 1000, 1e-9, 7);
    CAPTURE(n);
    CHECK(r.pass);
    CHECK(r.loop_identity_at_zero == 0.0);
    CHECK(r.disk_first_column < 1e-12);
  }
  CHECK_THROWS_AS(framing_map_check(1, 10, 1e-9, 1), Error);
  CHECK_THROWS_AS(framing_map_check(4, 0, 1e-9, 1), Error);
  // A deliberately impossible tolerance fails and names a sample.
  const FramingReport strict = framing_map_check(6, 50, 1e-30, 3);
  CHECK_FALSE(strict.pass);
  CHECK(strict.worst.find("sample") != std::string::npos);
}

TEST_CASE("smith form against brute-force cokernels") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  while (checked < 60) {
    std::vector<std::vector<std::int64_t>> m(3, std::vector<std::int64_t>(3));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto want = oracle::cokernel_factors(m);
    const auto det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 0) continue;
    ++checked;
    CAPTURE(det);
    CHECK(smith_invariant_factors(m) == want);
  }
  CHECK(oracle::cokernel_factors({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}) == std::vector<std::int64_t>{2, 6});
  CHECK(smith_invariant_factors({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}) == std::vector<std::int64_t>{2, 6});
}
