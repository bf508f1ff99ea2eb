#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace su2w {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using MatrixXc = CMatrix<double>;
using VectorXc = CVector<double>;
using Eigen::Index;

/// Raised when a numerical self-check fails (broken eigensolve, drifting
/// normalization). Distinct from bad user input, which uses std::invalid_argument.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Total angular momentum j, stored as the integer 2j.
class SpinJ {
 public:
  explicit SpinJ(int twice_j);

  /// Accepts j as a decimal ("10", "2.5"); rejects anything that is not a half-integer.
  static SpinJ from_value(double j);

  int twice_j() const { return twice_j_; }
  double value() const { return 0.5 * twice_j_; }
  Index dim() const { return twice_j_ + 1; }
  bool is_integer() const { return twice_j_ % 2 == 0; }

  /// m for basis index k (k = 0 is m = -j).
  double m_at(Index k) const { return static_cast<double>(k) - value(); }
  /// Basis index of m; throws std::invalid_argument when m is not one of -j..j.
  Index index_of(double m) const;
  bool contains(double m) const;

  friend bool operator==(SpinJ a, SpinJ b) { return a.twice_j_ == b.twice_j_; }

 private:
  int twice_j_;
};

std::string format_spin(SpinJ j);

/// Unit real 3-vector naming a spin component j_u = u . J.
class Direction {
 public:
  explicit Direction(const Eigen::Vector3d& u);
  Direction(double x, double y, double z) : Direction(Eigen::Vector3d(x, y, z)) {}

  static Direction normalized(const Eigen::Vector3d& v);
  static Direction x() { return Direction(1, 0, 0); }
  static Direction y() { return Direction(0, 1, 0); }
  static Direction z() { return Direction(0, 0, 1); }

  const Eigen::Vector3d& vector() const { return u_; }
  double operator[](int i) const { return u_[i]; }

 private:
  Eigen::Vector3d u_;
};

/// Pure state in the |j,m> basis, amplitudes ordered by ascending m.
class KetState {
 public:
  KetState(SpinJ j, VectorXc amplitudes);

  SpinJ spin() const { return j_; }
  const VectorXc& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(double m) const { return amplitudes_[j_.index_of(m)]; }

 private:
  SpinJ j_;
  VectorXc amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator in the |j,m> basis.
class DensityOperator {
 public:
  DensityOperator(SpinJ j, MatrixXc matrix);
  explicit DensityOperator(const KetState& ket);

  SpinJ spin() const { return j_; }
  const MatrixXc& matrix() const { return matrix_; }

 private:
  SpinJ j_;
  MatrixXc matrix_;
};

/// A POVM element: Hermitian and positive semidefinite, arbitrary trace.
class MeasurementElement {
 public:
  MeasurementElement(SpinJ j, MatrixXc matrix);

  static MeasurementElement projector(SpinJ j, double m);

  SpinJ spin() const { return j_; }
  const MatrixXc& matrix() const { return matrix_; }
  double trace() const { return trace_; }

 private:
  SpinJ j_;
  MatrixXc matrix_;
  double trace_;
};

template <typename Real = double>
struct SpinMatrices {
  CMatrix<Real> j1, j2, j3;
  CMatrix<Real> jplus, jminus;
};

/// Standard angular-momentum matrices in the |j,m> basis.
template <typename Real = double>
SpinMatrices<Real> spin_matrices(SpinJ j) {
  using C = std::complex<Real>;
  const Index d = j.dim();
  const Real jj = Real(j.twice_j()) / Real(2);

  SpinMatrices<Real> s;
  s.jplus = CMatrix<Real>::Zero(d, d);
  s.j3 = CMatrix<Real>::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    const Real m = Real(k) - jj;
    s.j3(k, k) = C(m, 0);
    if (k + 1 < d) {
      s.jplus(k + 1, k) = C(std::sqrt(jj * (jj + 1) - m * (m + 1)), 0);
    }
  }
  s.jminus = s.jplus.adjoint();
  s.j1 = (s.jplus + s.jminus) / C(2, 0);
  s.j2 = (s.jplus - s.jminus) / C(0, 2);
  return s;
}

/// u1 J1 + u2 J2 + u3 J3.
template <typename Real = double>
CMatrix<Real> component_matrix(SpinJ j, const Direction& u) {
  const auto s = spin_matrices<Real>(j);
  return s.j1 * Real(u[0]) + s.j2 * Real(u[1]) + s.j3 * Real(u[2]);
}

/// exp(-i angle (axis . J)), built from the eigendecomposition of the generator.
template <typename Real = double>
CMatrix<Real> rotation_operator(SpinJ j, const Direction& axis, Real angle) {
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(component_matrix<Real>(j, axis));
  CVector<Real> phases(j.dim());
  for (Index k = 0; k < j.dim(); ++k) {
    phases[k] = std::polar(Real(1), -angle * es.eigenvalues()[k]);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Largest absolute entry; the max-element norm used throughout the tests.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

double expectation(const DensityOperator& rho, const MatrixXc& a);
/// tr(rho A^2) - tr(rho A)^2, clamped at zero for round-off.
double variance(const DensityOperator& rho, const MatrixXc& a);

/// Outcome probabilities of measuring j_u on rho, indexed by ascending m.
Eigen::VectorXd measurement_statistics(const DensityOperator& rho, const Direction& u);

}  // namespace su2w
