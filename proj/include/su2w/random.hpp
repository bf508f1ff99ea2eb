#pragma once

#include <random>

#include "su2w/coherent.hpp"

namespace su2w {

using Rng = std::mt19937_64;

/// Haar-distributed pure state (normalized complex Gaussian vector).
KetState random_pure_state(SpinJ j, Rng& rng);

/// Hermitian matrix with standard normal entries (GUE-like, unnormalized).
MatrixXc random_hermitian(Index dim, Rng& rng);

/// Full-rank density matrix G G^dagger / tr.
DensityOperator random_density(SpinJ j, Rng& rng);

Direction random_direction(Rng& rng);

/// Uniform on the sphere.
SphereDirection random_sphere_point(Rng& rng);

/// sum_k w_k |j,Omega_k><j,Omega_k| with random weights and points; always classical.
DensityOperator random_coherent_mixture(SpinJ j, int terms, Rng& rng);

}  // namespace su2w
