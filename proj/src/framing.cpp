#include "frontkit/framing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "frontkit/error.hpp"

namespace fk {

namespace {

double orthogonality_residual(const Eigen::MatrixXd& m) {
  return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}


}  // namespace

Eigen::MatrixXd framing_loop(const Eigen::VectorXd& p, double t) {
  const Eigen::Index k = p.size();
  Eigen::MatrixXd m(k + 1, k + 1);
  const double s = std::sin(t);
  m(0, 0) = std::cos(2 * t);
  m.block(0, 1, 1, k) = -std::sin(2 * t) * p.transpose();
  m.block(1, 0, k, 1) = std::sin(2 * t) * p;
  m.block(1, 1, k, k) = Eigen::MatrixXd::Identity(k, k) - 2 * s * s * p * p.transpose();
  return m;
}

Eigen::MatrixXd framing_disk(const Eigen::VectorXd& p, double r, double t) {
  const Eigen::Index k = p.size();
  const double c = std::cos(t), s = std::sin(t);
  const double f = 2 * r * r - 1;
  const double a = 2 * std::sqrt(std::max(0.0, 1 - r * r)) * r;
  Eigen::MatrixXd m(k + 2, k + 2);
  m(0, 0) = f;
  m(0, 1) = -a * c;
  m.block(0, 2, 1, k) = a * s * p.transpose();
  m(1, 0) = a * c;
  m(1, 1) = f * c * c - s * s;
  m.block(1, 2, 1, k) = -(f + 1) * s * c * p.transpose();
  m.block(2, 0, k, 1) = a * s * p;
  m.block(2, 1, k, 1) = (f + 1) * s * c * p;
  m.block(2, 2, k, k) = Eigen::MatrixXd::Identity(k, k) - (f + 1) * s * s * p * p.transpose();
  return m;
}

Eigen::VectorXd stereographic_column(const Eigen::VectorXd& p, double r, double t) {
  const double g = 2 * std::sqrt(std::max(0.0, 1 - r * r));
  Eigen::VectorXd v(p.size() + 2);
  v(0) = 2 * r * r - 1;
  v(1) = g * r * std::cos(t);
  v.tail(p.size()) = g * r * std::sin(t) * p;
  return v;
}

FramingReport framing_map_check(int n, int samples, double tol, std::uint64_t seed) {
  if (n < 2 || n > 8) fail_precondition("framing check: n must lie in 2..8");
  if (samples < 1) fail_precondition("framing check: samples must be positive");
  if (!(tol > 0)) fail_precondition("framing check: tol must be positive");

  FramingReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.tol = tol;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::acos(-1.0);

  double worst_value = -1;
  auto record = [&](double& slot, double value, const char* check, int sample) {
    slot = std::max(slot, value);
    if (value > worst_value) {
      worst_value = value;
      std::ostringstream os;
      os << check << " at sample " << sample << ": residual " << value;
      rep.worst = os.str();
    }
  };

  for (int i = 0; i < samples; ++i) {
    Eigen::VectorXd p(n - 1);
    do {
      for (Eigen::Index j = 0; j < p.size(); ++j) p(j) = normal(rng);
    } while (p.norm() < 1e-12);
    p.normalize();
    const double t = pi * unit(rng);
    const double r = unit(rng);

    const Eigen::MatrixXd loop = framing_loop(p, t);
    record(rep.loop_orthogonality, orthogonality_residual(loop), "loop orthogonality", i);
    record(rep.loop_determinant, std::abs(loop.determinant() - 1), "loop determinant", i);
    record(rep.loop_identity_at_zero,
           (framing_loop(p, 0) - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), "loop at t=0", i);

    const Eigen::MatrixXd disk = framing_disk(p, r, t);
    record(rep.disk_orthogonality, orthogonality_residual(disk), "disk orthogonality", i);
    record(rep.disk_determinant, std::abs(disk.determinant() - 1), "disk determinant", i);
    record(rep.disk_first_column, (disk.col(0) - stereographic_column(p, r, t)).cwiseAbs().maxCoeff(),
           "disk first column", i);
    record(rep.disk_boundary, (framing_disk(p, 1.0, t).bottomRightCorner(n, n) - loop).cwiseAbs().maxCoeff(),
           "disk boundary", i);
  }
  rep.pass = worst_value < tol;
  if (rep.pass) rep.worst.clear();
  return rep;
}

}  // namespace fk
