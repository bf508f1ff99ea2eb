#include "su2w/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "su2w/gallery.hpp"

namespace su2w::cli {

using nlohmann::ordered_json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

namespace {

std::string csv_cell(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

ordered_json json_number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return std::strtod(format_number(v).c_str(), nullptr);
}

ordered_json json_cell(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return json_number(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  return std::get<std::string>(v);
}

ordered_json table_json(const Table& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json rec = ordered_json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) rec[t.columns[c]] = json_cell(row[c]);
    arr.push_back(std::move(rec));
  }
  return arr;
}

std::string csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) out += (c ? "," : "") + t.columns[c];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(row[c]);
    out += '\n';
  }
  return out;
}

const char* status_name(SqueezingStatus s) { return s == SqueezingStatus::defined ? "defined" : "undefined"; }

Table squeezing_table(const SqueezingVerdict& v) {
  Table t{{"quantity", "value"}, {}};
  auto add = [&t](std::string key, Value value) { t.rows.push_back({std::move(key), std::move(value)}); };
  add("status", std::string(status_name(v.status)));
  add("mean_j1", v.mean_spin[0]);
  add("mean_j2", v.mean_spin[1]);
  add("mean_j3", v.mean_spin[2]);
  add("var_j1", v.axis_variances[0]);
  add("var_j2", v.axis_variances[1]);
  add("var_j3", v.axis_variances[2]);
  add("min_perp_variance", v.min_perp_variance.value_or(std::numeric_limits<double>::quiet_NaN()));
  const std::pair<const char*, const Criterion*> crit[] = {
      {"coherent_level", &v.coherent_level}, {"interferometric", &v.interferometric}, {"uncertainty", &v.uncertainty}};
  for (const auto& [name, c] : crit) {
    add(std::string(name) + "_threshold", c->threshold);
    add(std::string(name) + "_lhs", c->lhs);
    add(std::string(name) + "_satisfied", c->satisfied ? Value(*c->satisfied) : Value(std::string("undefined")));
  }
  return t;
}

ordered_json criterion_json(const Criterion& c) {
  ordered_json out = ordered_json::object();
  out["threshold"] = json_number(c.threshold);
  out["lhs"] = json_number(c.lhs);
  out["satisfied"] = c.satisfied ? ordered_json(*c.satisfied) : ordered_json(nullptr);
  return out;
}

}  // namespace

std::string render_table(const Table& table, Format format) {
  if (format == Format::csv) return csv(table);
  return table_json(table).dump(2) + "\n";
}

std::string render_report(const Report& r, Format format) {
  const Table outcomes = outcome_table(r.outcomes);
  if (format == Format::csv) {
    return "# outcomes\n" + csv(outcomes) + "# squeezing\n" + csv(squeezing_table(r.squeezing));
  }
  const SqueezingVerdict& v = r.squeezing;
  ordered_json sq = ordered_json::object();
  sq["status"] = status_name(v.status);
  sq["mean_spin"] = {json_number(v.mean_spin[0]), json_number(v.mean_spin[1]), json_number(v.mean_spin[2])};
  sq["axis_variances"] = {json_number(v.axis_variances[0]), json_number(v.axis_variances[1]),
                          json_number(v.axis_variances[2])};
  sq["min_perp_variance"] = v.min_perp_variance ? json_number(*v.min_perp_variance) : ordered_json(nullptr);
  sq["coherent_level"] = criterion_json(v.coherent_level);
  sq["interferometric"] = criterion_json(v.interferometric);
  sq["uncertainty"] = criterion_json(v.uncertainty);

  ordered_json out = ordered_json::object();
  out["j"] = json_number(r.j.value());
  const auto& u = r.direction.vector();
  out["direction"] = {json_number(u[0]), json_number(u[1]), json_number(u[2])};
  out["outcomes"] = table_json(outcomes);
  out["squeezing"] = std::move(sq);
  return out.dump(2) + "\n";
}

SpinJ parse_spin(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const int num = std::stoi(text.substr(0, slash), &used);
      if (used != slash || text.substr(slash + 1) != "2") throw std::invalid_argument("");
      return SpinJ(num);
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return SpinJ::from_value(v);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot read spin '" + text + "'; use forms like 10, 2.5 or 5/2");
  }
}

Direction parse_direction(const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  std::vector<double> v;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stod(item, &used));
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0) throw std::invalid_argument("cannot read direction '" + text + "'");
  }
  if (v.size() != 3) throw std::invalid_argument("direction needs three comma-separated components");
  return Direction::normalized(Eigen::Vector3d(v[0], v[1], v[2]));
}

namespace {

std::complex<double> read_complex(const nlohmann::json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_object()) return {e.value("re", 0.0), e.value("im", 0.0)};
  throw std::invalid_argument("matrix entries must be numbers or {\"re\": ., \"im\": .}");
}

DensityOperator parse_matrix(const nlohmann::json& rows, std::optional<SpinJ> j) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("state matrix must be a non-empty array");
  const Index d = Index(rows.size());
  MatrixXc m(d, d);
  for (Index r = 0; r < d; ++r) {
    const auto& row = rows[std::size_t(r)];
    if (!row.is_array() || Index(row.size()) != d) throw std::invalid_argument("state matrix must be square");
    for (Index c = 0; c < d; ++c) m(r, c) = read_complex(row[std::size_t(c)]);
  }
  const SpinJ from_size(int(d - 1));
  if (j && !(*j == from_size)) throw std::invalid_argument("matrix size does not match --j");
  return DensityOperator(from_size, std::move(m));
}

double required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw std::invalid_argument(std::string("state family needs numeric \"") + key + "\"");
  }
  return doc[key].get<double>();
}

}  // namespace

DensityOperator parse_state(const nlohmann::json& doc, std::optional<SpinJ> j, std::optional<double> alpha_sq) {
  if (doc.is_array()) return parse_matrix(doc, j);
  if (!doc.is_object()) throw std::invalid_argument("state must be a JSON object or matrix");
  if (doc.contains("matrix")) return parse_matrix(doc["matrix"], j);

  if (doc.contains("j")) {
    const SpinJ from_json = doc["j"].is_string() ? parse_spin(doc["j"].get<std::string>())
                                                  : SpinJ::from_value(required(doc, "j"));
    if (j && !(*j == from_json)) throw std::invalid_argument("state \"j\" disagrees with --j");
    j = from_json;
  }
  if (!j) throw std::invalid_argument("state family needs a spin: pass --j or \"j\"");
  if (!doc.contains("family") || !doc["family"].is_string()) {
    throw std::invalid_argument("state object needs \"family\" or \"matrix\"");
  }

  const std::string family = doc["family"].get<std::string>();
  if (family == "cat") return DensityOperator(cat_state(*j));
  if (family == "phase_averaged") return phase_averaged_equatorial(*j);
  if (family == "intelligent") return DensityOperator(intelligent_state(*j, required(doc, "eta")).state);
  if (family == "coherent") {
    return DensityOperator(coherent_state(*j, SphereDirection(required(doc, "theta"), doc.value("phi", 0.0))));
  }
  if (family == "superposition") {
    const double a = doc.contains("alpha_sq") ? required(doc, "alpha_sq")
                     : alpha_sq             ? *alpha_sq
                                            : throw std::invalid_argument("superposition needs alpha_sq");
    if (!(a >= 0 && a <= 1)) throw std::invalid_argument("alpha_sq must lie in [0, 1]");
    return DensityOperator(partial_superposition(*j, std::sqrt(a), std::sqrt(1 - a)));
  }
  throw std::invalid_argument("unknown state family '" + family + "'");
}

namespace {

struct Options {
  std::string j_text = "10";
  double eta = 0.5;
  double eta_step = 0.05;
  std::optional<double> alpha_sq;
  std::string format = "csv";
  std::optional<double> tol;
  std::string out_path;
  std::string state;
  std::string direction = "0,0,1";
};

double report_tolerance(const Options& o) {
  if (o.tol) return *o.tol;
  if (const char* env = std::getenv("SU2W_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0)) throw std::invalid_argument("SU2W_TOL is not a valid tolerance");
    return v;
  }
  return kDefaultReportTol;
}

int emit(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "su2w: cannot write " << o.out_path << "\n";
    return kInvalidArguments;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical bounds on angular-momentum statistics", "su2w"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool spin = true) {
    if (spin) sub->add_option("--j", o.j_text, "Spin j (10, 2.5 or 5/2)")->capture_default_str();
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", o.out_path, "Write to this file instead of stdout");
  };
  auto add_tol = [&o](CLI::App* sub) { sub->add_option("--tol", o.tol, "Violation tolerance (default 1e-10)"); };

  CLI::App* fig1 = app.add_subcommand("fig1", "Phase-averaged state vs. classical-measurement bound");
  add_common(fig1);
  add_tol(fig1);
  CLI::App* fig2 = app.add_subcommand("fig2", "SU(2) vs. quadrature classical-state bounds");
  add_common(fig2);
  CLI::App* fig3 = app.add_subcommand("fig3", "Cat state J1 statistics vs. classical-state bound");
  add_common(fig3);
  add_tol(fig3);
  CLI::App* fig4 = app.add_subcommand("fig4", "Intelligent state J1 statistics vs. classical-state bound");
  add_common(fig4);
  add_tol(fig4);
  fig4->add_option("--eta", o.eta, "Intelligent-state parameter in (0, 1]")->capture_default_str();
  CLI::App* fig5 = app.add_subcommand("fig5", "p(m=0) of intelligent states across eta");
  add_common(fig5);
  add_tol(fig5);
  fig5->add_option("--eta", o.eta_step, "Grid step; the grid is step, 2 step, ..., 1")->capture_default_str();
  CLI::App* bound = app.add_subcommand("bound", "Classical-state and quadrature bounds for every m");
  add_common(bound);
  CLI::App* report = app.add_subcommand("report", "Test a state against the classical-state bounds");
  add_common(report);
  add_tol(report);
  report->add_option("--state", o.state, "State as inline JSON")->required();
  report->add_option("--direction", o.direction, "Measured component x,y,z")->capture_default_str();
  report->add_option("--alpha-sq", o.alpha_sq, "Superposition weight |alpha|^2");
  CLI::App* check = app.add_subcommand("check", "Run the structural invariant suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidArguments;
  }

  try {
    const Format format = o.format == "json" ? Format::json : Format::csv;
    if (check->parsed()) {
      bool ok = true;
      for (const CheckResult& r : run_invariant_checks()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
      }
      return ok ? kSuccess : kInternalFailure;
    }

    const double tol = report_tolerance(o);
    if (report->parsed()) {
      const bool j_given = report->count("--j") > 0;
      const auto doc = nlohmann::json::parse(o.state);
      const DensityOperator rho =
          parse_state(doc, j_given ? std::optional<SpinJ>(parse_spin(o.j_text)) : std::nullopt, o.alpha_sq);
      return emit(render_report(make_report(rho, parse_direction(o.direction), tol), format), o, out, err);
    }

    const SpinJ j = parse_spin(o.j_text);
    Table table;
    if (fig1->parsed()) table = su2w::fig1(j, tol);
    if (fig2->parsed()) table = su2w::fig2(j);
    if (fig3->parsed()) table = su2w::fig3(j, tol);
    if (fig4->parsed()) table = su2w::fig4(j, o.eta, tol);
    if (fig5->parsed()) table = su2w::fig5(j, eta_grid(o.eta_step), tol);
    if (bound->parsed()) table = bound_table(j);
    return emit(render_table(table, format), o, out, err);
  } catch (const InvariantError& e) {
    err << "su2w: internal invariant failure: " << e.what() << "\n";
    return kInternalFailure;
  } catch (const std::logic_error& e) {
    err << "su2w: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const nlohmann::json::exception& e) {
    err << "su2w: bad state JSON: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const std::exception& e) {
    err << "su2w: " << e.what() << "\n";
    return kInternalFailure;
  }
}

}  // namespace su2w::cli
