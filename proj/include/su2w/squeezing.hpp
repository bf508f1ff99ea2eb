#pragma once

#include <optional>

#include "su2w/coherent.hpp"

namespace su2w {

inline constexpr double kDefaultMeanTol = 1e-9;
/// A criterion counts as satisfied only when it beats its reference level by more
/// than this (relative to max(1, reference)); coherent states sit exactly on it.
inline constexpr double kDefaultCriterionTol = 1e-9;

/// <J> as a real 3-vector.
Eigen::Vector3d mean_spin(const DensityOperator& rho);

/// Two unit vectors completing mean/|mean| to a right-handed orthonormal frame.
std::pair<Direction, Direction> transverse_frame(const Eigen::Vector3d& mean);

/// Symmetrized covariance 1/2<{J_a,J_b}> - <J_a><J_b> for two components.
Eigen::Matrix2d covariance(const DensityOperator& rho, const Direction& a, const Direction& b);

struct PerpVariance {
  double value;
  Direction direction;
};

/// Smallest variance among spin components orthogonal to <J>. Throws
/// std::domain_error when |<J>| < tol_mean.
PerpVariance min_perp_variance(const DensityOperator& rho, double tol_mean = kDefaultMeanTol);

struct Criterion {
  /// Reference level the statistic has to go below.
  double threshold;
  /// The statistic compared to threshold.
  double lhs;
  /// Empty when the criterion is undefined (<J> = 0).
  std::optional<bool> satisfied;
};

enum class SqueezingStatus { defined, undefined };

struct SqueezingVerdict {
  Eigen::Vector3d mean_spin;
  SqueezingStatus status;
  /// Empty when status is undefined.
  std::optional<double> min_perp_variance;
  /// (Delta J)^2 < j/2
  Criterion coherent_level;
  /// (Delta J)^2 / |<J>|^2 < 1/(2j)
  Criterion interferometric;
  /// (Delta J)^2 < |<J>|/2
  Criterion uncertainty;
  /// Var(J1), Var(J2), Var(J3); reported for every state.
  Eigen::Vector3d axis_variances;
};

SqueezingVerdict evaluate_criteria(const DensityOperator& rho, double tol_mean = kDefaultMeanTol,
                                   double tol_criterion = kDefaultCriterionTol);

/// |<J_u^2> - j/2 - (2j-1)/(2j) <J_u>^2| in the coherent state |j,Omega>.
double coherent_identity_check(SpinJ j, const Direction& u, const SphereDirection& omega);

}  // namespace su2w
