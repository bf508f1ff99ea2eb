#pragma once

#include "su2w/spin.hpp"

namespace su2w {

/// Uniform phase average of the equatorial coherent states:
/// diag(C(2j, j+m) / 2^{2j}).
DensityOperator phase_averaged_equatorial(SpinJ j);

/// (|j,j> + |j,-j>) / sqrt(2).
KetState cat_state(SpinJ j);

/// alpha |j,j> + beta |j,0>, integer j only.
KetState partial_superposition(SpinJ j, std::complex<double> alpha, std::complex<double> beta);

/// Unitary whose columns are J1 eigenvectors with a fixed phase convention:
/// column k is exp(-i pi/2 J2) |j, m_k>, so that J1 acts on them as J3 acts on |j,m>.
MatrixXc j1_eigenbasis(SpinJ j);

/// Generalized binomial coefficient C(top, k) for real top and integer k.
double generalized_binomial(double top, int k);

/// Jacobi polynomial P_n^{(alpha,beta)}(x) from its explicit finite sum. The sum is
/// a polynomial identity in alpha and beta, so negative integer parameters are fine.
double jacobi_polynomial(int n, double alpha, double beta, double x);

struct IntelligentStateResult {
  /// Amplitudes in the J3 basis.
  KetState state;
  /// The same state in the j1_eigenbasis(); largest entry is real positive.
  VectorXc j1_coefficients;
  double eta;
  /// || (eta J2 + i J1) psi ||
  double residual;
  /// Max deviation from the Jacobi closed form (j1 basis).
  double jacobi_agreement;
};

/// Solution of (eta J2 + i J1)|psi> = 0 for integer j and eta in (0, 1], from the null
/// space of the operator. Throws std::invalid_argument for half-integer j. Cross-checked against the Jacobi-polynomial closed form.
IntelligentStateResult intelligent_state(SpinJ j, double eta);

/// Normalized closed-form coefficients of the intelligent state in the j1 eigenbasis
/// (integer j, eta in (0, 1]). All entries are non-negative.
Eigen::VectorXd intelligent_state_closed_form(SpinJ j, double eta);

}  // namespace su2w
