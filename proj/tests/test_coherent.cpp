#include <gtest/gtest.h>

#include "su2w/coherent.hpp"
#include "su2w/random.hpp"

using namespace su2w;
using std::numbers::pi;

namespace {

// C(20,10) / 2^20 = 184756 / 1048576
constexpr double kCentralBinomial10 = 184756.0 / 1048576.0;

double fidelity(const VectorXc& a, const VectorXc& b) { return std::norm(a.dot(b)); }

VectorXc basis(SpinJ j, double m) {
  VectorXc v = VectorXc::Zero(j.dim());
  v[j.index_of(m)] = 1.0;
  return v;
}

}  // namespace

TEST(SphereDirection, CanonicalRanges) {
  const SphereDirection pole(0.0, 2.0);
  EXPECT_EQ(pole.phi(), 0.0);
  EXPECT_EQ(SphereDirection(pi, -1.0).phi(), 0.0);
  EXPECT_NEAR(SphereDirection(1.0, 1.5 * pi).phi(), -0.5 * pi, 1e-15);
  EXPECT_NEAR(SphereDirection(1.0, -pi).phi(), pi, 1e-15);
  EXPECT_THROW(SphereDirection(-0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(SphereDirection(3.5, 0.0), std::invalid_argument);
}

TEST(LogBinomial, MatchesExactIntegers) {
  std::uint64_t c = 1;
  for (int k = 0; k <= 40; ++k) {
    EXPECT_NEAR(std::exp(log_binomial(40, k)), double(c), 1e-12 * double(c));
    c = c * std::uint64_t(40 - k) / std::uint64_t(k + 1);
  }
  EXPECT_TRUE(std::isfinite(log_binomial(2000, 1000)));
}

TEST(CoherentState, PolesAreExtremalWeightStates) {
  for (int tj : {1, 4, 21}) {
    const SpinJ j(tj);
    EXPECT_NEAR(fidelity(coherent_state(j, {0.0, 0.7}).amplitudes(), basis(j, j.value())), 1.0, 1e-14);
    EXPECT_NEAR(fidelity(coherent_state(j, {pi, 0.0}).amplitudes(), basis(j, -j.value())), 1.0, 1e-14);
  }
}

TEST(CoherentState, EquatorialCentralWeight) {
  const KetState c = coherent_state(SpinJ(20), {pi / 2, 0.3});
  EXPECT_NEAR(std::norm(c.amplitude(0.0)), kCentralBinomial10, 1e-14);
}

TEST(CoherentState, SmallSpinHandFormula) {
  // j = 1: amplitudes (s^2, sqrt2 s c e^{-i phi}, c^2 e^{-2 i phi}) for m = -1, 0, 1
  const double th = 0.9, ph = -2.1;
  const double s = std::sin(th / 2), c = std::cos(th / 2);
  const VectorXc a = coherent_state(SpinJ(2), {th, ph}).amplitudes();
  EXPECT_LT(std::abs(a[0] - std::complex<double>(s * s)), 1e-15);
  EXPECT_LT(std::abs(a[1] - std::sqrt(2.0) * s * c * std::polar(1.0, -ph)), 1e-15);
  EXPECT_LT(std::abs(a[2] - c * c * std::polar(1.0, -2 * ph)), 1e-15);
}

TEST(CoherentState, ReproducesOverlapProbabilities) {
  Rng rng(3);
  for (int tj = 0; tj <= 40; ++tj) {
    const SpinJ j(tj);
    const SphereDirection omega = random_sphere_point(rng);
    const KetState c = coherent_state(j, omega);
    EXPECT_NEAR(c.amplitudes().squaredNorm(), 1.0, 1e-12);
    for (Index k = 0; k < j.dim(); ++k) {
      EXPECT_NEAR(std::norm(c.amplitudes()[k]), overlap_prob(j, j.m_at(k), omega.theta()), 1e-12);
    }
  }
}

TEST(OverlapProb, ValuesAndDomain) {
  EXPECT_DOUBLE_EQ(overlap_prob(SpinJ(8), 4.0, 0.0), 1.0);
  EXPECT_NEAR(overlap_prob(SpinJ(20), 0.0, pi / 2), kCentralBinomial10, 1e-14);
  EXPECT_THROW(overlap_prob(SpinJ(8), 5.0, 0.3), std::invalid_argument);
}

TEST(OverlapProb, MaximumSitsAtTanSquaredRatio) {
  // test-side scan followed by ternary refinement
  for (int tj : {6, 20, 33}) {
    const SpinJ j(tj);
    for (Index k = 1; k + 1 < j.dim(); ++k) {
      const double m = j.m_at(k), jv = j.value();
      auto f = [&](double t) { return overlap_prob(j, m, t); };
      double best = 0;
      for (int i = 1; i < 4000; ++i) best = f(i * pi / 4000) > f(best) ? i * pi / 4000 : best;
      double lo = std::max(0.0, best - pi / 4000), hi = std::min(pi, best + pi / 4000);
      for (int it = 0; it < 200; ++it) {
        const double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
        (f(a) < f(b) ? lo : hi) = (f(a) < f(b) ? a : b);
      }
      const double theta = 0.5 * (lo + hi);
      const double expected = 2 * std::atan(std::sqrt((jv - m) / (jv + m)));
      EXPECT_NEAR(theta, expected, 1e-6) << "2j = " << tj << " m = " << m;
    }
  }
}

TEST(HusimiQ, IdentityAndPerfectOverlap) {
  const SpinJ j(9);
  const double level = 10.0 / (4 * pi);
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    EXPECT_NEAR(husimi_q(MatrixXc::Identity(10, 10), j, random_sphere_point(rng)), level, 1e-14);
  }
  const VectorXc top = basis(j, 4.5);
  EXPECT_NEAR(husimi_q(top * top.adjoint(), j, {0.0, 0.0}), level, 1e-14);
}

TEST(HusimiQ, DensityOperatorsAreBounded) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const SpinJ j(1 + int(rng() % 20));
    const DensityOperator rho = random_density(j, rng);
    const double q = husimi_q(rho.matrix(), j, random_sphere_point(rng));
    EXPECT_GE(q, -1e-15);
    EXPECT_LE(q, j.dim() / (4 * pi) + 1e-12);
  }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegreeTwoNMinusOne) {
  const auto [x, w] = gauss_legendre(7);
  for (int deg = 0; deg <= 13; ++deg) {
    const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
    EXPECT_NEAR((w.array() * x.array().pow(deg)).sum(), exact, 1e-14) << "degree " << deg;
  }
}

TEST(SphereQuadrature, WeightsAndSizes) {
  for (int tj : {0, 3, 20}) {
    const auto nodes = sphere_quadrature(SpinJ(tj));
    EXPECT_EQ(nodes.size(), std::size_t((tj + 2) * (2 * tj + 4)));
    double total = 0;
    for (const auto& n : nodes) total += n.weight;
    EXPECT_NEAR(total, 4 * pi, 1e-10);
  }
}

TEST(SphereQuadrature, HusimiIntegratesToTrace) {
  Rng rng(42);
  for (int tj = 0; tj <= 40; tj += 5) {
    const SpinJ j(tj);
    const auto nodes = sphere_quadrature(j);
    const MatrixXc a = random_hermitian(j.dim(), rng);
    double integral = 0, identity = 0;
    for (const auto& n : nodes) {
      integral += n.weight * husimi_q(a, j, n.omega);
      identity += n.weight * husimi_q(MatrixXc::Identity(j.dim(), j.dim()), j, n.omega);
    }
    EXPECT_NEAR(integral, a.trace().real(), 1e-9) << "2j = " << tj;
    EXPECT_NEAR(identity, double(j.dim()), 1e-10);
  }
}

TEST(SphereQuadrature, RandomDensityAtJFifteen) {
  Rng rng(15);
  const SpinJ j(30);
  const DensityOperator rho = random_density(j, rng);
  double integral = 0;
  for (const auto& n : sphere_quadrature(j)) integral += n.weight * husimi_q(rho.matrix(), j, n.omega);
  EXPECT_NEAR(integral, 1.0, 1e-10);
}

TEST(SphereQuadrature, ResolutionOfIdentity) {
  for (int tj = 0; tj <= 20; ++tj) {
    const SpinJ j(tj);
    MatrixXc acc = MatrixXc::Zero(j.dim(), j.dim());
    for (const auto& n : sphere_quadrature(j)) {
      const VectorXc c = coherent_amplitudes(j, n.omega);
      acc += n.weight * c * c.adjoint();
    }
    acc *= double(j.dim()) / (4 * pi);
    EXPECT_LT(max_abs(acc - MatrixXc::Identity(j.dim(), j.dim())), 1e-9) << "2j = " << tj;
  }
}
