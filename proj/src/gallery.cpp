#include "su2w/gallery.hpp"

#include <limits>
#include <numbers>

#include "su2w/coherent.hpp"

namespace su2w {

DensityOperator phase_averaged_equatorial(SpinJ j) {
  const int n = j.twice_j();
  MatrixXc rho = MatrixXc::Zero(j.dim(), j.dim());
  for (int k = 0; k <= n; ++k) {
    rho(k, k) = std::exp(log_binomial(n, k) - n * std::numbers::ln2);
  }
  // C(2j,k)/2^{2j} through lgamma is accurate to a few ulps; restore the exact trace
  rho /= rho.trace().real();
  return DensityOperator(j, std::move(rho));
}

KetState cat_state(SpinJ j) {
  VectorXc amps = VectorXc::Zero(j.dim());
  if (j.twice_j() == 0) {
    amps[0] = 1.0;
  } else {
    amps[0] = amps[j.dim() - 1] = 1.0 / std::sqrt(2.0);
  }
  return KetState(j, std::move(amps));
}

KetState partial_superposition(SpinJ j, std::complex<double> alpha, std::complex<double> beta) {
  if (!j.is_integer() || j.twice_j() == 0) {
    throw std::invalid_argument("partial superposition needs integer j >= 1");
  }
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
    throw std::invalid_argument("|alpha|^2 + |beta|^2 must equal 1");
  }
  VectorXc amps = VectorXc::Zero(j.dim());
  amps[j.index_of(j.value())] = alpha;
  amps[j.index_of(0.0)] = beta;
  return KetState(j, std::move(amps));
}

MatrixXc j1_eigenbasis(SpinJ j) {
  return rotation_operator(j, Direction::y(), std::numbers::pi / 2);
}

double generalized_binomial(double top, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (top - i) / (i + 1);
  return r;
}

double jacobi_polynomial(int n, double alpha, double beta, double x) {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
  const double lo = (x - 1) / 2, hi = (x + 1) / 2;
  double acc = 0.0;
  for (int s = 0; s <= n; ++s) {
    acc += generalized_binomial(n + alpha, n - s) * generalized_binomial(n + beta, s) * std::pow(lo, s) *
           std::pow(hi, n - s);
  }
  return acc;
}

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("eta must lie in (0, 1]");
}

/// y^n P_n^{(-m,-m)}(1/y) with y = sqrt(1 - eta^2), finite as y -> 0.
double scaled_jacobi(int n, double m, double jv, double y) {
  if (y > 0) return std::pow(y, n) * jacobi_polynomial(n, -m, -m, 1.0 / y);
  // leading coefficient of P_n^{(-m,-m)} is 2^{-n} sum_s C(j, n-s) C(j, s)
  double acc = 0.0;
  for (int s = 0; s <= n; ++s) acc += generalized_binomial(jv, n - s) * generalized_binomial(jv, s);
  return std::ldexp(acc, -n);
}

}  // namespace

Eigen::VectorXd intelligent_state_closed_form(SpinJ j, double eta) {
  check_eta(eta);
  if (!j.is_integer()) throw std::invalid_argument("closed form is available for integer j only");
  const double y = std::sqrt(std::max(0.0, 1.0 - eta * eta));
  const int tj = j.twice_j();

  Eigen::VectorXd logc(j.dim());
  for (int k = 0; k <= tj; ++k) {
    const double m = j.m_at(k);
    const double p = scaled_jacobi(k, m, j.value(), y);
    logc[k] = p > 0 ? -0.5 * log_binomial(tj, k) + k * std::log(2.0 / eta) + std::log(p)
                    : -std::numeric_limits<double>::infinity();
  }
  Eigen::VectorXd c = (logc.array() - logc.maxCoeff()).exp();
  return c / c.norm();
}

IntelligentStateResult intelligent_state(SpinJ j, double eta) {
  check_eta(eta);
  // the spectrum of eta j2 + i j1 is m sqrt(eta^2 - 1), so a null vector needs m = 0
  if (!j.is_integer()) throw std::invalid_argument("intelligent states need integer j");
  const auto s = spin_matrices(j);
  const MatrixXc op = s.j2 * eta + s.j1 * std::complex<double>(0, 1);

  Eigen::JacobiSVD<MatrixXc> svd(op, Eigen::ComputeFullV);
  VectorXc psi = svd.matrixV().col(j.dim() - 1);
  psi /= psi.norm();

  const MatrixXc basis = j1_eigenbasis(j);
  VectorXc b = basis.adjoint() * psi;
  Index top = 0;
  b.cwiseAbs().maxCoeff(&top);
  const std::complex<double> phase = std::conj(b[top]) / std::abs(b[top]);
  psi *= phase;
  b *= phase;

  const double residual = (op * psi).norm();
  const double agreement = max_abs(b - intelligent_state_closed_form(j, eta).cast<std::complex<double>>());
  return IntelligentStateResult{KetState(j, std::move(psi)), std::move(b), eta, residual, agreement};
}

}  // namespace su2w
