#include <cstdio>

#include "su2w/figures.hpp"
#include "su2w/random.hpp"

namespace su2w {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckResult worst_below(std::string name, double worst, double tol) {
  return {std::move(name), worst < tol, "worst " + sci(worst) + " (tol " + sci(tol) + ")"};
}

CheckResult commutators() {
  double worst = 0;
  const std::complex<double> i(0, 1);
  for (int tj = 1; tj <= 100; ++tj) {
    const auto s = spin_matrices(SpinJ(tj));
    worst = std::max({worst, max_abs(s.j1 * s.j2 - s.j2 * s.j1 - i * s.j3),
                      max_abs(s.j2 * s.j3 - s.j3 * s.j2 - i * s.j1),
                      max_abs(s.j3 * s.j1 - s.j1 * s.j3 - i * s.j2)});
  }
  return worst_below("commutation relations, j <= 50", worst, 1e-12);
}

CheckResult casimir() {
  double worst = 0;
  for (int tj = 1; tj <= 100; ++tj) {
    const SpinJ j(tj);
    const auto s = spin_matrices(j);
    const MatrixXc c = s.j1 * s.j1 + s.j2 * s.j2 + s.j3 * s.j3;
    const double jv = j.value();
    const MatrixXc ref = MatrixXc::Identity(j.dim(), j.dim()) * (jv * (jv + 1));
    worst = std::max(worst, max_abs(c - ref) / (jv * jv));
  }
  return worst_below("Casimir J^2 = j(j+1), relative to j^2, j <= 50", worst, 1e-9);
}

CheckResult husimi_normalization() {
  Rng rng(2011);
  double worst = 0;
  for (int tj : {6, 20, 30}) {
    const SpinJ j(tj);
    const auto nodes = sphere_quadrature(j);
    for (int t = 0; t < 20; ++t) {
      const MatrixXc a = random_hermitian(j.dim(), rng);
      double integral = 0;
      for (const auto& node : nodes) integral += node.weight * husimi_q(a, j, node.omega);
      worst = std::max(worst, std::abs(integral - a.trace().real()));
    }
  }
  return worst_below("integral of Q equals tr A, j in {3, 10, 15}", worst, 1e-9);
}

CheckResult coherent_identity() {
  Rng rng(7);
  double worst = 0;
  for (int tj = 1; tj <= 20; ++tj) {
    for (int t = 0; t < 10; ++t) {
      worst = std::max(worst, coherent_identity_check(SpinJ(tj), random_direction(rng), random_sphere_point(rng)));
    }
  }
  return worst_below("coherent-state second-moment identity, j <= 10", worst, 1e-10);
}

CheckResult bound_identity() {
  double worst = 0;
  for (int tj = 1; tj <= 40; ++tj) {
    const SpinJ j(tj);
    for (Index k = 0; k < j.dim(); ++k) {
      const double m = j.m_at(k);
      const DensityOperator rho(j, MeasurementElement::projector(j, m).matrix());
      worst = std::max(worst, std::abs(classical_state_bound(j, m) - classical_measurement_bound(rho, 1.0)));
    }
  }
  return worst_below("state bound equals measurement bound of |j,m><j,m|, j <= 20", worst, 1e-10);
}

CheckResult qmax_location() {
  double worst = 0;
  for (int tj = 2; tj <= 40; ++tj) {
    const SpinJ j(tj);
    for (Index k = 1; k + 1 < j.dim(); ++k) {
      const double m = j.m_at(k), jv = j.value();
      const DensityOperator rho(j, MeasurementElement::projector(j, m).matrix());
      const double t = std::tan(qmax(rho).location.theta() / 2);
      worst = std::max(worst, std::abs(t * t - (jv - m) / (jv + m)));
    }
  }
  return worst_below("Q_max of |j,m> at tan^2(theta/2) = (j-m)/(j+m), j <= 20", worst, 1e-6);
}

CheckResult quadrature_dominance() {
  double worst = std::numeric_limits<double>::infinity();
  for (int tj = 1; tj <= 100; ++tj) {
    const SpinJ j(tj);
    for (Index k = 0; k < j.dim(); ++k) {
      worst = std::min(worst, classical_state_bound(j, j.m_at(k)) - quadrature_bound(j, j.m_at(k)));
    }
  }
  return {"state bound above quadrature bound, j <= 50", worst > 0, "smallest gap " + sci(worst)};
}

CheckResult classical_mixtures() {
  Rng rng(1972);
  int violations = 0, squeezed = 0;
  for (int t = 0; t < 200; ++t) {
    const SpinJ j(1 + int(rng() % 20));
    const DensityOperator rho = random_coherent_mixture(j, 1 + int(rng() % 6), rng);
    const Report r = make_report(rho, random_direction(rng));
    for (const auto& o : r.outcomes) violations += o.violated;
    const auto& sq = r.squeezing;
    if (sq.status == SqueezingStatus::defined &&
        (*sq.coherent_level.satisfied || *sq.interferometric.satisfied || *sq.uncertainty.satisfied)) {
      ++squeezed;
    }
  }
  return {"coherent-state mixtures: no bound violation, no squeezing", violations == 0 && squeezed == 0,
          std::to_string(violations) + " violations, " + std::to_string(squeezed) + " squeezed"};
}

}  // namespace

std::vector<CheckResult> run_invariant_checks() {
  std::vector<CheckResult> out;
  for (auto* check : {commutators, casimir, husimi_normalization, coherent_identity, bound_identity, qmax_location,
                      quadrature_dominance, classical_mixtures}) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      out.push_back({"check raised", false, e.what()});
    }
  }
  return out;
}

}  // namespace su2w
