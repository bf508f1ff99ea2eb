#pragma once

#include <cstddef>
#include <vector>

#include "su2w/coherent.hpp"

namespace su2w {

inline constexpr double kDefaultReportTol = 1e-10;

/// Comparison of one outcome probability against its classical bound.
struct BoundReport {
  double m;
  double probability;
  double bound;
  bool violated;
  /// probability / bound; +inf when the bound is zero and the probability is not.
  double violation_ratio;
};

struct QmaxConfig {
  int theta_points = 181;
  int phi_points = 360;
  /// Refinement stops once a full coordinate sweep gains less than this.
  double value_tol = 1e-12;
  /// Off-diagonal magnitude below which rho is treated as diagonal in the J3 basis.
  double diagonal_tol = 1e-14;
  std::size_t max_evaluations = 2'000'000;
};

struct QmaxResult {
  /// max over the sphere of <j,Omega|rho|j,Omega> (no (2j+1)/(4 pi) factor).
  double value;
  SphereDirection location;
  std::size_t evaluations;
  bool diagonal = false;
  bool capped = false;
};

/// Largest probability of outcome m that any classical state can give:
/// C(2j,j+m) ((j-m)/2j)^{j-m} ((j+m)/2j)^{j+m}. Equal to 1 at m = +-j.
double classical_state_bound(SpinJ j, double m);

QmaxResult qmax(const DensityOperator& rho, const QmaxConfig& config = {});

/// Bound on tr(Delta rho) for a classical POVM element Delta with the given trace.
double classical_measurement_bound(const DensityOperator& rho, double trace_delta,
                                   const QmaxConfig& config = {});

/// Bound on the same statistic implied by the two-mode quadrature P and Q functions.
double quadrature_bound(SpinJ j, double m);

/// sqrt(2/pi): classical bound on p(x) for x = m / sqrt(2j) as j grows.
double bright_limit_bound();

struct ScaledPoint {
  double x;
  double density;
};

/// x_m = m / sqrt(2j), density_m = sqrt(2j) p_m.
std::vector<ScaledPoint> scaled_statistics(const Eigen::VectorXd& probs, SpinJ j);

/// One record per outcome, ascending m. The spin is inferred from probs.size() = 2j+1.
std::vector<BoundReport> violation_report(const Eigen::VectorXd& probs, const Eigen::VectorXd& bounds,
                                          double tol_report = kDefaultReportTol);

/// classical_state_bound for every m, ascending.
Eigen::VectorXd classical_state_bounds(SpinJ j);

}  // namespace su2w
