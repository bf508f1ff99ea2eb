#include "su2w/spin.hpp"

#include <cstdio>

namespace su2w {

namespace {

constexpr double kStateTol = 1e-12;
constexpr double kPsdTol = 1e-10;

void check_hermitian(const MatrixXc& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  if (max_abs(m - m.adjoint()) > kStateTol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
}

void check_psd(const MatrixXc& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw std::invalid_argument(std::string(what) + ": matrix has a negative eigenvalue");
  }
}

double clamp_nonnegative(double v, const char* what) {
  if (v >= 0) return v;
  if (v >= -kPsdTol) return 0.0;
  throw InvariantError(std::string(what) + " is negative beyond round-off");
}

}  // namespace

SpinJ::SpinJ(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 0) throw std::invalid_argument("spin j must be non-negative");
}

SpinJ SpinJ::from_value(double j) {
  const double twice = 2.0 * j;
  if (!std::isfinite(j) || j < 0 || std::abs(twice - std::round(twice)) > 1e-9) {
    throw std::invalid_argument("spin j must be a non-negative half-integer");
  }
  return SpinJ(static_cast<int>(std::lround(twice)));
}

bool SpinJ::contains(double m) const {
  const double k = m + value();
  return std::isfinite(m) && k >= -1e-9 && k <= twice_j_ + 1e-9 &&
         std::abs(k - std::round(k)) < 1e-9;
}

Index SpinJ::index_of(double m) const {
  if (!contains(m)) {
    throw std::invalid_argument("m = " + std::to_string(m) + " is not a valid projection for j = " +
                                format_spin(*this));
  }
  return static_cast<Index>(std::lround(m + value()));
}

std::string format_spin(SpinJ j) {
  return j.is_integer() ? std::to_string(j.twice_j() / 2) : std::to_string(j.twice_j()) + "/2";
}

Direction::Direction(const Eigen::Vector3d& u) : u_(u) {
  if (!u.allFinite() || std::abs(u.norm() - 1.0) > kStateTol) {
    throw std::invalid_argument("direction must be a unit vector");
  }
}

Direction Direction::normalized(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero vector");
  return Direction(v / n);
}

KetState::KetState(SpinJ j, VectorXc amplitudes) : j_(j), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != j.dim()) {
    throw std::invalid_argument("ket length does not match 2j+1");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kStateTol) {
    throw std::invalid_argument("ket is not normalized");
  }
}

DensityOperator::DensityOperator(SpinJ j, MatrixXc matrix) : j_(j), matrix_(std::move(matrix)) {
  if (matrix_.rows() != j.dim() || matrix_.cols() != j.dim()) {
    throw std::invalid_argument("density matrix dimension does not match 2j+1");
  }
  check_hermitian(matrix_, "density operator");
  if (std::abs(matrix_.trace() - std::complex<double>(1.0)) > kStateTol) {
    throw std::invalid_argument("density operator does not have unit trace");
  }
  check_psd(matrix_, "density operator");
}

DensityOperator::DensityOperator(const KetState& ket)
    : j_(ket.spin()), matrix_(ket.amplitudes() * ket.amplitudes().adjoint()) {}

MeasurementElement::MeasurementElement(SpinJ j, MatrixXc matrix) : j_(j), matrix_(std::move(matrix)) {
  if (matrix_.rows() != j.dim() || matrix_.cols() != j.dim()) {
    throw std::invalid_argument("POVM element dimension does not match 2j+1");
  }
  check_hermitian(matrix_, "POVM element");
  check_psd(matrix_, "POVM element");
  trace_ = matrix_.trace().real();
}

MeasurementElement MeasurementElement::projector(SpinJ j, double m) {
  MatrixXc p = MatrixXc::Zero(j.dim(), j.dim());
  const Index k = j.index_of(m);
  p(k, k) = 1.0;
  return MeasurementElement(j, std::move(p));
}

double expectation(const DensityOperator& rho, const MatrixXc& a) {
  if (a.rows() != rho.spin().dim() || a.cols() != rho.spin().dim()) {
    throw std::invalid_argument("operator dimension does not match the state");
  }
  return (rho.matrix() * a).trace().real();
}

double variance(const DensityOperator& rho, const MatrixXc& a) {
  const double mean = expectation(rho, a);
  const double second = (rho.matrix() * a * a).trace().real();
  return clamp_nonnegative(second - mean * mean, "variance");
}

Eigen::VectorXd measurement_statistics(const DensityOperator& rho, const Direction& u) {
  const SpinJ j = rho.spin();
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(component_matrix(j, u));
  if (es.info() != Eigen::Success) throw InvariantError("eigensolver did not converge");

  const auto& lambda = es.eigenvalues();
  if (std::abs(lambda[0] + j.value()) > 1e-8) {
    throw InvariantError("component spectrum does not start at -j");
  }
  for (Index k = 1; k < lambda.size(); ++k) {
    if (std::abs(lambda[k] - lambda[k - 1] - 1.0) > 1e-8) {
      throw InvariantError("component spectrum is not evenly spaced");
    }
  }

  const MatrixXc& v = es.eigenvectors();
  Eigen::VectorXd p(j.dim());
  for (Index k = 0; k < j.dim(); ++k) {
    const double pk = (v.col(k).adjoint() * rho.matrix() * v.col(k)).value().real();
    p[k] = clamp_nonnegative(pk, "outcome probability");
  }
  if (std::abs(p.sum() - 1.0) > 1e-10) {
    throw InvariantError("outcome probabilities do not sum to one");
  }
  return p;
}

}  // namespace su2w
