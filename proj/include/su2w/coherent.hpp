#pragma once

#include <numbers>
#include <vector>

#include "su2w/spin.hpp"

namespace su2w {

/// Point on the unit sphere. theta in [0, pi], phi in (-pi, pi]; phi is 0 at the poles.
class SphereDirection {
 public:
  SphereDirection() = default;
  /// Wraps phi into (-pi, pi]; theta outside [0, pi] is rejected.
  SphereDirection(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  Eigen::Vector3d unit_vector() const;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

/// log C(n, k) via lgamma; finite for the whole range where C itself overflows.
template <typename Real = double>
Real log_binomial(int n, int k) {
  using std::lgamma;
  return lgamma(Real(n + 1)) - lgamma(Real(k + 1)) - lgamma(Real(n - k + 1));
}

/// x^p * y^q in log space with the convention 0^0 = 1. Returns log(0) = -inf when
/// a zero base carries a positive power.
template <typename Real = double>
Real log_power_product(Real x, int p, Real y, int q) {
  Real acc = 0;
  if (p > 0) acc += Real(p) * std::log(x);
  if (q > 0) acc += Real(q) * std::log(y);
  return acc;
}

/// Real magnitudes sqrt(C(2j,j+m)) sin^{j-m}(theta/2) cos^{j+m}(theta/2), ascending m.
template <typename Real = double>
Eigen::Matrix<Real, Eigen::Dynamic, 1> coherent_magnitudes(SpinJ j, Real theta) {
  const int n = j.twice_j();
  const Real s = std::abs(std::sin(theta / 2));
  const Real c = std::abs(std::cos(theta / 2));
  Eigen::Matrix<Real, Eigen::Dynamic, 1> out(j.dim());
  for (int k = 0; k <= n; ++k) {
    // k = j + m, so j - m = n - k
    out[k] = std::exp(Real(0.5) * log_binomial<Real>(n, k) + log_power_product<Real>(s, n - k, c, k));
  }
  return out;
}

/// Amplitudes <j,m|j,Omega> with phase exp[-i (j+m) phi].
template <typename Real = double>
CVector<Real> coherent_amplitudes(SpinJ j, const SphereDirection& omega) {
  const auto mag = coherent_magnitudes<Real>(j, Real(omega.theta()));
  CVector<Real> out(j.dim());
  for (Index k = 0; k < j.dim(); ++k) {
    out[k] = std::polar(mag[k], -Real(k) * Real(omega.phi()));
  }
  return out;
}

KetState coherent_state(SpinJ j, const SphereDirection& omega);

/// |<j,m|j,Omega>|^2; independent of phi.
double overlap_prob(SpinJ j, double m, double theta);

/// <j,Omega| A |j,Omega> without the (2j+1)/(4 pi) prefactor.
double coherent_expectation(const MatrixXc& a, SpinJ j, const SphereDirection& omega);

/// Husimi function (2j+1)/(4 pi) <j,Omega|A|j,Omega>.
double husimi_q(const MatrixXc& a, SpinJ j, const SphereDirection& omega);

struct QuadratureNode {
  SphereDirection omega;
  double weight;
};

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int order);

/// Product rule on the sphere, exact for <j,Omega|A|j,Omega> integrands. Weights sum to 4 pi.
std::vector<QuadratureNode> sphere_quadrature(SpinJ j);

}  // namespace su2w
