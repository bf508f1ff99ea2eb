#include "su2w/bounds.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace su2w {

using std::numbers::pi;

namespace {

constexpr double kInvPhi = 0.6180339887498949;

struct Probe {
  double x;
  double value;
};

/// Golden-section maximization on [lo, hi]; assumes a single local peak inside.
Probe golden_maximize(const std::function<double(double)>& f, double lo, double hi, double width_tol) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Probe{c, fc} : Probe{d, fd};
}

bool is_j3_diagonal(const MatrixXc& m, double tol) {
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (r != c && std::abs(m(r, c)) >= tol) return false;
    }
  }
  return true;
}

/// Theta-only objective for rho diagonal in |j,m>: sum_k w_k |<j,m_k|j,theta>|^2.
class DiagonalObjective {
 public:
  DiagonalObjective(SpinJ j, Eigen::VectorXd weights) : j_(j), w_(std::move(weights)) {
    log_binom_.resize(j.dim());
    for (Index k = 0; k < j.dim(); ++k) log_binom_[k] = log_binomial(j.twice_j(), int(k));
  }

  double value(double theta) {
    ++evaluations;
    const double s = std::abs(std::sin(theta / 2)), c = std::abs(std::cos(theta / 2));
    const int n = j_.twice_j();
    double acc = 0;
    for (int k = 0; k <= n; ++k) {
      if (w_[k] == 0) continue;
      acc += w_[k] * std::exp(log_binom_[k] + log_power_product(s, 2 * (n - k), c, 2 * k));
    }
    return acc;
  }

  /// d/dtheta of value(); each term is C [a s^{2a-1} c^{2b+1} - b s^{2a+1} c^{2b-1}].
  double slope(double theta) {
    ++evaluations;
    const double s = std::abs(std::sin(theta / 2)), c = std::abs(std::cos(theta / 2));
    const int n = j_.twice_j();
    double acc = 0;
    for (int k = 0; k <= n; ++k) {
      if (w_[k] == 0) continue;
      const int a = n - k, b = k;
      double term = 0;
      if (a > 0) term += a * std::exp(log_binom_[k] + log_power_product(s, 2 * a - 1, c, 2 * b + 1));
      if (b > 0) term -= b * std::exp(log_binom_[k] + log_power_product(s, 2 * a + 1, c, 2 * b - 1));
      acc += w_[k] * term;
    }
    return acc;
  }

  std::size_t evaluations = 0;

 private:
  SpinJ j_;
  Eigen::VectorXd w_;
  std::vector<double> log_binom_;
};

QmaxResult qmax_diagonal(const DensityOperator& rho, const QmaxConfig& config) {
  const SpinJ j = rho.spin();
  DiagonalObjective f(j, rho.matrix().diagonal().real());

  const int n = std::max(config.theta_points, int(2 * j.dim() + 1));
  const double step = pi / (n - 1);
  Probe best{0.0, f.value(0.0)};
  int best_i = 0;
  for (int i = 1; i < n; ++i) {
    const double theta = (i == n - 1) ? pi : i * step;
    const double v = f.value(theta);
    if (v > best.value) {
      best = {theta, v};
      best_i = i;
    }
  }

  const double lo = best_i == 0 ? 0.0 : (best_i - 1) * step;
  const double hi = best_i == n - 1 ? pi : (best_i + 1) * step;
  Probe local{};
  if (f.slope(lo) > 0 && f.slope(hi) < 0) {
    // The peak is a sign change of the slope; bisection resolves its location
    // far below the value-flatness limit of golden section.
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
      const double mid = 0.5 * (a + b);
      (f.slope(mid) > 0 ? a : b) = mid;
    }
    const double theta = 0.5 * (a + b);
    local = {theta, f.value(theta)};
  } else {
    local = golden_maximize([&](double t) { return f.value(t); }, lo, hi, 1e-12);
  }
  if (local.value > best.value) best = local;

  return QmaxResult{best.value, SphereDirection(best.x, 0.0), f.evaluations, true, false};
}

/// <j,Omega|rho|j,Omega> split as S_0 + 2 Re sum_{d>0} e^{i d phi} S_d for a fixed theta row.
class ThetaRow {
 public:
  ThetaRow(const MatrixXc& rho, SpinJ j, double theta) : s_(j.dim()) {
    const Eigen::VectorXd a = coherent_magnitudes(j, theta);
    const Index d = j.dim();
    for (Index shift = 0; shift < d; ++shift) {
      std::complex<double> acc = 0;
      for (Index k = shift; k < d; ++k) acc += a[k] * a[k - shift] * rho(k, k - shift);
      s_[shift] = acc;
    }
  }

  double value(double phi) const {
    double acc = s_[0].real();
    for (Index shift = 1; shift < s_.size(); ++shift) {
      acc += 2 * (std::polar(1.0, shift * phi) * s_[shift]).real();
    }
    return acc;
  }

 private:
  VectorXc s_;
};

QmaxResult qmax_general(const DensityOperator& rho, const QmaxConfig& config) {
  const SpinJ j = rho.spin();
  const int nt = std::max(config.theta_points, 3);
  const int np = std::max(config.phi_points, 4);
  const double dtheta = pi / (nt - 1);
  const double dphi = 2 * pi / np;
  std::size_t evaluations = 0;

  double best_theta = 0, best_phi = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < nt; ++i) {
    const double theta = (i == nt - 1) ? pi : i * dtheta;
    const ThetaRow row(rho.matrix(), j, theta);
    const bool pole = (i == 0 || i == nt - 1);
    for (int b = 0; b < (pole ? 1 : np); ++b) {
      const double phi = pole ? 0.0 : -pi + (b + 1) * dphi;
      const double v = row.value(phi);
      ++evaluations;
      if (v > best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  auto eval = [&](double theta, double phi) {
    ++evaluations;
    return coherent_expectation(rho.matrix(), j, SphereDirection(theta, phi));
  };

  bool capped = false;
  for (int sweep = 0; sweep < 500; ++sweep) {
    if (evaluations > config.max_evaluations) {
      capped = true;
      break;
    }
    const double start = best;
    const Probe t = golden_maximize([&](double th) { return eval(th, best_phi); },
                                    std::max(0.0, best_theta - dtheta), std::min(pi, best_theta + dtheta),
                                    1e-12);
    if (t.value > best) {
      best = t.value;
      best_theta = t.x;
    }
    const Probe p = golden_maximize([&](double ph) { return eval(best_theta, ph); }, best_phi - dphi,
                                    best_phi + dphi, 1e-12);
    if (p.value > best) {
      best = p.value;
      best_phi = p.x;
    }
    if (best - start < config.value_tol) break;
  }

  return QmaxResult{best, SphereDirection(best_theta, best_phi), evaluations, false, capped};
}

}  // namespace

double classical_state_bound(SpinJ j, double m) {
  const Index k = j.index_of(m);
  const int n = j.twice_j();
  const int plus = int(k), minus = n - int(k);  // j+m, j-m
  const double tj = n;
  return std::exp(log_binomial(n, plus) + log_power_product(minus / tj, minus, plus / tj, plus));
}

Eigen::VectorXd classical_state_bounds(SpinJ j) {
  Eigen::VectorXd out(j.dim());
  for (Index k = 0; k < j.dim(); ++k) out[k] = classical_state_bound(j, j.m_at(k));
  return out;
}

QmaxResult qmax(const DensityOperator& rho, const QmaxConfig& config) {
  if (is_j3_diagonal(rho.matrix(), config.diagonal_tol)) return qmax_diagonal(rho, config);
  return qmax_general(rho, config);
}

double classical_measurement_bound(const DensityOperator& rho, double trace_delta, const QmaxConfig& config) {
  if (!(trace_delta >= 0) || !std::isfinite(trace_delta)) {
    throw std::invalid_argument("tr(Delta) must be finite and non-negative");
  }
  return qmax(rho, config).value * trace_delta;
}

double quadrature_bound(SpinJ j, double m) {
  const Index k = j.index_of(m);
  const int plus = int(k), minus = j.twice_j() - int(k);
  const double log_num = log_power_product(double(plus), plus, double(minus), minus) - j.twice_j();
  return std::exp(log_num - std::lgamma(plus + 1.0) - std::lgamma(minus + 1.0));
}

double bright_limit_bound() { return std::sqrt(2.0 / pi); }

std::vector<ScaledPoint> scaled_statistics(const Eigen::VectorXd& probs, SpinJ j) {
  if (probs.size() != j.dim()) throw std::invalid_argument("probability vector length must be 2j+1");
  if (j.twice_j() == 0) throw std::invalid_argument("scaling needs j > 0");
  const double scale = std::sqrt(double(j.twice_j()));
  std::vector<ScaledPoint> out;
  out.reserve(std::size_t(j.dim()));
  for (Index k = 0; k < j.dim(); ++k) out.push_back({j.m_at(k) / scale, scale * probs[k]});
  return out;
}

std::vector<BoundReport> violation_report(const Eigen::VectorXd& probs, const Eigen::VectorXd& bounds,
                                          double tol_report) {
  if (probs.size() == 0 || probs.size() != bounds.size()) {
    throw std::invalid_argument("probabilities and bounds must be non-empty and of equal length");
  }
  if (!(tol_report >= 0)) throw std::invalid_argument("report tolerance must be non-negative");
  const SpinJ j(int(probs.size() - 1));
  std::vector<BoundReport> out;
  out.reserve(std::size_t(probs.size()));
  for (Index k = 0; k < probs.size(); ++k) {
    const double p = probs[k], b = bounds[k];
    double ratio = 0.0;
    if (b > 0) {
      ratio = p / b;
    } else if (p > 0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    out.push_back({j.m_at(k), p, b, p > b + tol_report, ratio});
  }
  return out;
}

}  // namespace su2w
