#include "su2w/figures.hpp"

#include <algorithm>
#include <cmath>

#include "su2w/gallery.hpp"

namespace su2w {

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column named " + name);
  return std::size_t(it - columns.begin());
}

double Table::number(std::size_t row, const std::string& name) const {
  return std::get<double>(rows.at(row).at(column(name)));
}

bool Table::flag(std::size_t row, const std::string& name) const {
  return std::get<bool>(rows.at(row).at(column(name)));
}

namespace {

Table statistics_table(const Eigen::VectorXd& probs, const Eigen::VectorXd& bounds, double tol) {
  Table t{{"m", "p_jm", "bound", "violated"}, {}};
  for (const BoundReport& r : violation_report(probs, bounds, tol)) {
    t.rows.push_back({r.m, r.probability, r.bound, r.violated});
  }
  return t;
}

}  // namespace

Table fig1(SpinJ j, double tol_report) {
  const DensityOperator rho = phase_averaged_equatorial(j);
  const Eigen::VectorXd p = measurement_statistics(rho, Direction::z());
  const double bound = classical_measurement_bound(rho, 1.0);
  return statistics_table(p, Eigen::VectorXd::Constant(j.dim(), bound), tol_report);
}

Table fig2(SpinJ j) {
  Table t{{"m", "su2_bound", "quadrature_bound"}, {}};
  for (Index k = 0; k < j.dim(); ++k) {
    const double m = j.m_at(k);
    t.rows.push_back({m, classical_state_bound(j, m), quadrature_bound(j, m)});
  }
  return t;
}

Table fig3(SpinJ j, double tol_report) {
  const DensityOperator rho(cat_state(j));
  return statistics_table(measurement_statistics(rho, Direction::x()), classical_state_bounds(j), tol_report);
}

Table fig4(SpinJ j, double eta, double tol_report) {
  const DensityOperator rho(intelligent_state(j, eta).state);
  return statistics_table(measurement_statistics(rho, Direction::x()), classical_state_bounds(j), tol_report);
}

Table fig5(SpinJ j, const std::vector<double>& etas, double tol_report) {
  if (!j.is_integer()) throw std::invalid_argument("fig5 tracks the m = 0 outcome and needs integer j");
  std::vector<double> sorted = etas;
  std::sort(sorted.begin(), sorted.end());
  const double bound = classical_state_bound(j, 0.0);
  const Index centre = j.index_of(0.0);
  Table t{{"eta", "p_m0", "bound", "violated"}, {}};
  for (double eta : sorted) {
    const DensityOperator rho(intelligent_state(j, eta).state);
    const double p = measurement_statistics(rho, Direction::x())[centre];
    t.rows.push_back({eta, p, bound, p > bound + tol_report});
  }
  return t;
}

std::vector<double> eta_grid(double step) {
  if (!(step > 0 && step <= 1)) throw std::invalid_argument("eta step must lie in (0, 1]");
  std::vector<double> out;
  const int n = int(std::floor(1.0 / step + 1e-9));
  for (int k = 1; k <= n; ++k) out.push_back(k * step);
  if (out.empty() || std::abs(out.back() - 1.0) > 1e-12) out.push_back(1.0);
  out.back() = std::min(out.back(), 1.0);
  return out;
}

Table bound_table(SpinJ j) {
  Table t{{"m", "state_bound", "quadrature_bound", "scaled_bound"}, {}};
  const double scale = std::sqrt(double(j.twice_j()));
  for (Index k = 0; k < j.dim(); ++k) {
    const double m = j.m_at(k);
    const double b = classical_state_bound(j, m);
    t.rows.push_back({m, b, quadrature_bound(j, m), scale * b});
  }
  return t;
}

Report make_report(const DensityOperator& rho, const Direction& u, double tol_report) {
  const SpinJ j = rho.spin();
  const Eigen::VectorXd p = measurement_statistics(rho, u);
  return Report{j, u, violation_report(p, classical_state_bounds(j), tol_report), evaluate_criteria(rho)};
}

Table outcome_table(const std::vector<BoundReport>& outcomes) {
  Table t{{"m", "probability", "bound", "violated", "violation_ratio"}, {}};
  for (const BoundReport& r : outcomes) {
    t.rows.push_back({r.m, r.probability, r.bound, r.violated, r.violation_ratio});
  }
  return t;
}

}  // namespace su2w
