#include "su2w/random.hpp"

namespace su2w {

namespace {

std::complex<double> complex_normal(Rng& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

}  // namespace

KetState random_pure_state(SpinJ j, Rng& rng) {
  VectorXc v(j.dim());
  for (Index k = 0; k < v.size(); ++k) v[k] = complex_normal(rng);
  v /= v.norm();
  return KetState(j, std::move(v));
}

MatrixXc random_hermitian(Index dim, Rng& rng) {
  MatrixXc g(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    for (Index r = 0; r < dim; ++r) g(r, c) = complex_normal(rng);
  }
  return (g + g.adjoint()) / 2.0;
}

DensityOperator random_density(SpinJ j, Rng& rng) {
  MatrixXc g(j.dim(), j.dim());
  for (Index c = 0; c < g.cols(); ++c) {
    for (Index r = 0; r < g.rows(); ++r) g(r, c) = complex_normal(rng);
  }
  MatrixXc rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityOperator(j, std::move(rho));
}

Direction random_direction(Rng& rng) {
  std::normal_distribution<double> n;
  return Direction::normalized(Eigen::Vector3d(n(rng), n(rng), n(rng)));
}

SphereDirection random_sphere_point(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> p(-std::numbers::pi, std::numbers::pi);
  return SphereDirection(std::acos(u(rng)), p(rng));
}

DensityOperator random_coherent_mixture(SpinJ j, int terms, Rng& rng) {
  if (terms < 1) throw std::invalid_argument("mixture needs at least one term");
  std::uniform_real_distribution<double> w(0.0, 1.0);
  MatrixXc rho = MatrixXc::Zero(j.dim(), j.dim());
  double total = 0;
  for (int t = 0; t < terms; ++t) {
    const double wt = w(rng) + 1e-3;
    const VectorXc c = coherent_state(j, random_sphere_point(rng)).amplitudes();
    rho += wt * c * c.adjoint();
    total += wt;
  }
  rho /= total;
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityOperator(j, std::move(rho));
}

}  // namespace su2w
