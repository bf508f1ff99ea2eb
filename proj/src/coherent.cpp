#include "su2w/coherent.hpp"

#include <algorithm>

namespace su2w {

using std::numbers::pi;

SphereDirection::SphereDirection(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || theta < 0.0 || theta > pi) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
  theta_ = theta;
  double p = std::remainder(phi, 2 * pi);
  if (p <= -pi) p += 2 * pi;
  phi_ = (theta == 0.0 || theta == pi) ? 0.0 : p;
}

Eigen::Vector3d SphereDirection::unit_vector() const {
  return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
}

KetState coherent_state(SpinJ j, const SphereDirection& omega) {
  VectorXc amps = coherent_amplitudes(j, omega);
  // log-space magnitudes leave the norm off by a few ulps
  amps /= amps.norm();
  return KetState(j, std::move(amps));
}

double overlap_prob(SpinJ j, double m, double theta) {
  const Index k = j.index_of(m);
  const int n = j.twice_j();
  const double s = std::abs(std::sin(theta / 2));
  const double c = std::abs(std::cos(theta / 2));
  return std::exp(log_binomial(n, int(k)) + log_power_product(s, 2 * (n - int(k)), c, 2 * int(k)));
}

double coherent_expectation(const MatrixXc& a, SpinJ j, const SphereDirection& omega) {
  if (a.rows() != j.dim() || a.cols() != j.dim()) {
    throw std::invalid_argument("operator dimension does not match 2j+1");
  }
  const VectorXc c = coherent_amplitudes(j, omega);
  return (c.adjoint() * a * c).value().real();
}

double husimi_q(const MatrixXc& a, SpinJ j, const SphereDirection& omega) {
  return double(j.dim()) / (4 * pi) * coherent_expectation(a, j, omega);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  Eigen::VectorXd nodes = es.eigenvalues();
  Eigen::VectorXd weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
  return {nodes, weights};
}

std::vector<QuadratureNode> sphere_quadrature(SpinJ j) {
  const int n_theta = j.twice_j() + 2;
  const int n_phi = 2 * j.twice_j() + 4;
  const auto [x, w] = gauss_legendre(n_theta);

  std::vector<QuadratureNode> nodes;
  nodes.reserve(std::size_t(n_theta) * n_phi);
  const double dphi = 2 * pi / n_phi;
  for (int a = 0; a < n_theta; ++a) {
    const double theta = std::acos(std::clamp(x[a], -1.0, 1.0));
    for (int b = 0; b < n_phi; ++b) {
      nodes.push_back({SphereDirection(theta, -pi + (b + 1) * dphi), w[a] * dphi});
    }
  }
  return nodes;
}

}  // namespace su2w
