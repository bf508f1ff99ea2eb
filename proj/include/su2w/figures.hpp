#pragma once

#include <string>
#include <variant>
#include <vector>

#include "su2w/bounds.hpp"
#include "su2w/squeezing.hpp"

namespace su2w {

using Value = std::variant<double, bool, std::string>;

/// Column-ordered records shared by the CSV and JSON writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
  bool flag(std::size_t row, const std::string& name) const;
};

/// Phase-averaged equatorial state measured along J3 against its own Q_max bound.
/// Columns: m, p_jm, bound, violated.
Table fig1(SpinJ j, double tol_report = kDefaultReportTol);

/// Columns: m, su2_bound, quadrature_bound.
Table fig2(SpinJ j);

/// Cat state measured along J1 against the classical-state bound.
/// Columns: m, p_jm, bound, violated.
Table fig3(SpinJ j, double tol_report = kDefaultReportTol);

/// Intelligent state measured along J1. Columns: m, p_jm, bound, violated.
Table fig4(SpinJ j, double eta, double tol_report = kDefaultReportTol);

/// p(m=0) of intelligent states along J1 over an eta grid; integer j only.
/// Columns: eta, p_m0, bound, violated.
Table fig5(SpinJ j, const std::vector<double>& etas, double tol_report = kDefaultReportTol);

/// step, 2 step, ..., 1 (1 is always included).
std::vector<double> eta_grid(double step = 0.05);

/// Columns: m, state_bound, quadrature_bound, scaled_bound (sqrt(2j) times state_bound).
Table bound_table(SpinJ j);

struct Report {
  SpinJ j;
  Direction direction;
  std::vector<BoundReport> outcomes;
  SqueezingVerdict squeezing;
};

/// Statistics of j_u on rho against the classical-state bound, plus squeezing criteria.
Report make_report(const DensityOperator& rho, const Direction& u, double tol_report = kDefaultReportTol);

/// Outcome records as a table. Columns: m, probability, bound, violated, violation_ratio.
Table outcome_table(const std::vector<BoundReport>& outcomes);

struct CheckResult {
  std::string name;
  bool passed;
  /// Worst residual or a short description of the failure.
  std::string detail;
};

/// Structural invariant suite behind `su2w check`.
std::vector<CheckResult> run_invariant_checks();

}  // namespace su2w
