#include "su2w/squeezing.hpp"

#include <limits>

namespace su2w {

Eigen::Vector3d mean_spin(const DensityOperator& rho) {
  const auto s = spin_matrices(rho.spin());
  return {expectation(rho, s.j1), expectation(rho, s.j2), expectation(rho, s.j3)};
}

std::pair<Direction, Direction> transverse_frame(const Eigen::Vector3d& mean) {
  const Eigen::Vector3d u = mean.normalized();
  // seed with the axis least aligned with u
  Eigen::Index axis = 0;
  u.cwiseAbs().minCoeff(&axis);
  const Eigen::Vector3d seed = Eigen::Vector3d::Unit(axis);
  const Eigen::Vector3d e1 = u.cross(seed).normalized();
  const Eigen::Vector3d e2 = u.cross(e1);
  return {Direction::normalized(e1), Direction::normalized(e2)};
}

Eigen::Matrix2d covariance(const DensityOperator& rho, const Direction& a, const Direction& b) {
  const SpinJ j = rho.spin();
  const MatrixXc ja = component_matrix(j, a);
  const MatrixXc jb = component_matrix(j, b);
  const double ma = expectation(rho, ja), mb = expectation(rho, jb);
  Eigen::Matrix2d c;
  c(0, 0) = variance(rho, ja);
  c(1, 1) = variance(rho, jb);
  c(0, 1) = c(1, 0) = 0.5 * expectation(rho, ja * jb + jb * ja) - ma * mb;
  return c;
}

PerpVariance min_perp_variance(const DensityOperator& rho, double tol_mean) {
  const Eigen::Vector3d mean = mean_spin(rho);
  if (mean.norm() < tol_mean) {
    throw std::domain_error("mean spin vanishes; transverse directions are undefined");
  }
  const auto [e1, e2] = transverse_frame(mean);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(covariance(rho, e1, e2));
  const Eigen::Vector2d w = es.eigenvectors().col(0);
  const Eigen::Vector3d dir = w[0] * e1.vector() + w[1] * e2.vector();
  return {std::max(0.0, es.eigenvalues()[0]), Direction::normalized(dir)};
}

SqueezingVerdict evaluate_criteria(const DensityOperator& rho, double tol_mean, double tol_criterion) {
  const SpinJ j = rho.spin();
  const auto s = spin_matrices(j);
  SqueezingVerdict v;
  v.mean_spin = mean_spin(rho);
  v.axis_variances = {variance(rho, s.j1), variance(rho, s.j2), variance(rho, s.j3)};

  const double jv = j.value();
  const double norm = v.mean_spin.norm();
  v.coherent_level.threshold = jv / 2;
  v.interferometric.threshold = jv > 0 ? 1.0 / (2 * jv) : std::numeric_limits<double>::infinity();
  v.uncertainty.threshold = norm / 2;

  if (norm < tol_mean) {
    v.status = SqueezingStatus::undefined;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    v.coherent_level.lhs = v.interferometric.lhs = v.uncertainty.lhs = nan;
    return v;
  }

  v.status = SqueezingStatus::defined;
  const double var = min_perp_variance(rho, tol_mean).value;
  v.min_perp_variance = var;
  v.coherent_level.lhs = var;
  v.interferometric.lhs = var / (norm * norm);
  v.uncertainty.lhs = var;

  auto below = [tol_criterion](const Criterion& c) {
    return c.lhs < c.threshold - tol_criterion * std::max(1.0, std::abs(c.threshold));
  };
  v.coherent_level.satisfied = below(v.coherent_level);
  v.interferometric.satisfied = below(v.interferometric);
  v.uncertainty.satisfied = below(v.uncertainty);
  return v;
}

double coherent_identity_check(SpinJ j, const Direction& u, const SphereDirection& omega) {
  const DensityOperator rho(coherent_state(j, omega));
  const MatrixXc ju = component_matrix(j, u);
  const double first = expectation(rho, ju);
  const double second = expectation(rho, ju * ju);
  const double jv = j.value();
  if (jv == 0) return std::abs(second);
  return std::abs(second - jv / 2 - (2 * jv - 1) / (2 * jv) * first * first);
}

}  // namespace su2w
