#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace fk {

// Loop in SO(n) indexed by p in S^{n-2} (a unit vector of length n-1) and t in [0, pi].
Eigen::MatrixXd framing_loop(const Eigen::VectorXd& p, double t);

// Extension over the disk: an (n+1)x(n+1) rotation for p in S^{n-2},
// r in [0, 1], t in [0, pi], built from f(r) = 2r^2 - 1 and g(r) = 2 sqrt(1 - r^2).
Eigen::MatrixXd framing_disk(const Eigen::VectorXd& p, double r, double t);

// (f(r), g(r) r cos t, g(r) r sin t p), computed directly.
Eigen::VectorXd stereographic_column(const Eigen::VectorXd& p, double r, double t);

struct FramingReport {
  int n = 0;
  int samples = 0;
  double tol = 0;
  // Worst residuals over all samples.
  double loop_orthogonality = 0;
  double loop_determinant = 0;
  double loop_identity_at_zero = 0;
  double disk_orthogonality = 0;
  double disk_determinant = 0;
  double disk_first_column = 0;
  double disk_boundary = 0;  // trailing block at r = 1 against framing_loop
  bool pass = false;
  std::string worst;  // worst-offending check and its sample, when failing
};

// Evaluates both maps on `samples` seeded random points; 2 <= n <= 8.
FramingReport framing_map_check(int n, int samples, double tol, std::uint64_t seed);

}  // namespace fk
