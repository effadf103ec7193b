#include "crinv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "crinv/coeff_file.hpp"
#include "crinv/errors.hpp"
#include "crinv/expression.hpp"

namespace crinv {

using Json = nlohmann::ordered_json;

InputKind parse_input_kind(const std::string& text) {
  if (text == "line_bundle_metric_h") return InputKind::line_bundle_metric_h;
  if (text == "conformal_factor_e2phi") return InputKind::conformal_factor_e2phi;
  if (text == "rigid_defining_F") return InputKind::rigid_defining_F;
  if (text == "compact_profile_psi") return InputKind::compact_profile_psi;
  throw domain_error("unknown input kind '" + text +
                     "' (expected line_bundle_metric_h, conformal_factor_e2phi, rigid_defining_F or compact_profile_psi)");
}

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::line_bundle_metric_h: return "line_bundle_metric_h";
    case InputKind::conformal_factor_e2phi: return "conformal_factor_e2phi";
    case InputKind::rigid_defining_F: return "rigid_defining_F";
    case InputKind::compact_profile_psi: return "compact_profile_psi";
  }
  return "?";
}

void InputSpec::validate() const {
  if (expr.has_value() == coeff_file.has_value()) throw domain_error("give exactly one of --expr or --coeff-file");
  if (order < 4) throw domain_error("--order must be at least 4, got " + std::to_string(order));
}

TruncatedSeries load_input_series(const InputSpec& spec) {
  spec.validate();
  const ExpressionVars vars =
      spec.kind == InputKind::compact_profile_psi ? ExpressionVars::profile : ExpressionVars::bivariate;
  if (spec.expr) return parse_expression(*spec.expr, spec.order, vars);
  TruncatedSeries s = read_coeff_file(*spec.coeff_file);
  if (s.order() < spec.order) return s;
  return s.truncated(spec.order);
}

CompactMetric compact_metric_from_input(const InputSpec& spec) {
  if (spec.kind != InputKind::compact_profile_psi) throw domain_error("expected --input-kind compact_profile_psi");
  const TruncatedSeries psi = load_input_series(spec);
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : psi.terms()) {
    if (e.second != 0) throw domain_error("psi must be a polynomial in u alone");
    if (!c.is_real()) throw domain_error("psi must have real coefficients");
    if (coeffs.size() <= static_cast<std::size_t>(e.first)) coeffs.resize(e.first + 1);
    coeffs[e.first] = c.real();
  }
  return CompactMetric(std::move(coeffs));
}

SurfaceChart chart_from_input(const InputSpec& spec) {
  switch (spec.kind) {
    case InputKind::line_bundle_metric_h: return phi_from_line_bundle_metric(load_input_series(spec));
    case InputKind::conformal_factor_e2phi:
      return SurfaceChart(load_input_series(spec).as_real(), ChartProvenance::direct);
    case InputKind::rigid_defining_F: return phi_from_rigid_defining(load_input_series(spec));
    case InputKind::compact_profile_psi: return compact_metric_from_input(spec).symbolic_chart(spec.order);
  }
  throw domain_error("unknown input kind");
}

namespace {

struct Options {
  std::string input_kind = "conformal_factor_e2phi";
  std::string expr;
  std::string coeff_file;
  int order = 16;
  int display_order = 6;
  std::string lambda;
  std::string probes = "1/10,1/16,1/25";
  std::string family = "a44";
  double tolerance = 1e-6;
  double sphericity_tolerance = 1e-8;
  std::string format = "json";
  std::string out;
  bool with_calibration = false;
};

std::vector<Rational> parse_rational_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw domain_error(std::string(flag) + ": '" + item + "' is not a rational p or p/q");
    }
  }
  return out;
}

GaussianRational parse_lambda(const std::string& text) {
  const auto parts = parse_rational_list(text, "--lambda");
  if (parts.empty() || parts.size() > 2) throw domain_error("--lambda expects re or re,im");
  return {parts[0], parts.size() == 2 ? parts[1] : Rational(0)};
}

std::string str(const GaussianRational& c) { return to_string(c); }

Json series_json(const TruncatedSeries& s, int display_order) {
  const int shown = std::min(display_order, s.order());
  Json terms = Json::array();
  for (int d = 0; d <= shown; ++d)
    for (int l = 0; l <= d; ++l) {
      const auto& c = s.coeff(d - l, l);
      if (!c.is_zero()) terms.push_back({{"k", d - l}, {"l", l}, {"value", str(c)}});
    }
  return {{"order", s.order()}, {"shown_through", shown}, {"text", print_expression(s.truncated(shown))}, {"terms", terms}};
}

/// Collects the report and tracks the exit status.
class Report {
 public:
  Report() {
    json_["input"] = Json::object();
    json_["series"] = Json::object();
    json_["values"] = Json::object();
    json_["residuals"] = Json::array();
    json_["verdicts"] = Json::object();
    json_["calibration"] = nullptr;
    json_["version"] = kVersion;
  }

  Json& operator[](const char* key) { return json_[key]; }

  void exact(const std::string& name, const TruncatedSeries& residual) {
    Json entry{{"name", name}, {"kind", "exact"}};
    if (residual.is_zero()) {
      entry["status"] = "exact-zero";
    } else {
      const Exponent e = *residual.lowest_term();
      entry["status"] = "nonzero";
      entry["first_nonzero"] = {{"k", e.first}, {"l", e.second}, {"value", str(residual.coeff(e.first, e.second))}};
      violated_ = true;
    }
    json_["residuals"].push_back(entry);
  }

  void exact(const std::string& name, const GaussianRational& residual) {
    Json entry{{"name", name}, {"kind", "exact"}, {"status", residual.is_zero() ? "exact-zero" : "nonzero"}};
    if (!residual.is_zero()) {
      entry["value"] = str(residual);
      violated_ = true;
    }
    json_["residuals"].push_back(entry);
  }

  void exact(const std::string& name, const BracketPolynomial& residual) {
    Json entry{{"name", name}, {"kind", "exact"}, {"status", residual.is_zero() ? "exact-zero" : "nonzero"}};
    if (!residual.is_zero()) {
      entry["value"] = to_string(residual);
      violated_ = true;
    }
    json_["residuals"].push_back(entry);
  }

  void numeric(const std::string& name, double value, double tolerance) {
    const bool ok = value < tolerance;
    json_["residuals"].push_back({{"name", name},
                                  {"kind", "numeric"},
                                  {"status", ok ? "within-tolerance" : "exceeds-tolerance"},
                                  {"value", value},
                                  {"tolerance", tolerance}});
    if (!ok) violated_ = true;
  }

  void fail_verdict() { violated_ = true; }
  bool violated() const { return violated_; }
  const Json& json() const { return json_; }

 private:
  Json json_;
  bool violated_ = false;
};

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(const Json& node, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_structured() && !value.empty()) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << (value.is_structured() ? std::string("-") : scalar_text(value)) << "\n";
      }
    }
  } else if (node.is_array()) {
    for (const auto& item : node) {
      if (item.is_object()) {
        std::string line;
        for (const auto& [key, value] : item.items()) {
          if (!line.empty()) line += "  ";
          line += key + "=" + (value.is_structured() ? value.dump() : scalar_text(value));
        }
        os << pad << "- " << line << "\n";
      } else {
        os << pad << "- " << scalar_text(item) << "\n";
      }
    }
  }
}

InputSpec input_spec(const Options& o) {
  InputSpec spec;
  spec.kind = parse_input_kind(o.input_kind);
  if (!o.expr.empty()) spec.expr = o.expr;
  if (!o.coeff_file.empty()) spec.coeff_file = o.coeff_file;
  spec.order = o.order;
  spec.validate();
  return spec;
}

Json input_json(const std::string& subcommand, const Options& o, const InputSpec* spec) {
  Json in{{"subcommand", subcommand}};
  if (spec) {
    in["kind"] = to_string(spec->kind);
    if (spec->expr) in["expr"] = *spec->expr;
    if (spec->coeff_file) in["coeff_file"] = spec->coeff_file->string();
    in["order"] = spec->order;
  }
  if (!o.lambda.empty()) in["lambda"] = o.lambda;
  return in;
}

Json sphericity_json(const SphericityVerdict& v) {
  Json out{{"spherical", v.spherical}, {"verified_through", v.verified_through}};
  if (v.first_nonzero)
    out["first_nonzero_r"] = {{"k", v.first_nonzero->first}, {"l", v.first_nonzero->second}, {"value", str(v.first_nonzero_value)}};
  else
    out["first_nonzero_r"] = nullptr;
  return out;
}

void add_chart_identities(Report& report, const std::string& prefix, const SurfaceChart& chart) {
  const GaussIdentityResiduals g = check_qisgauss(chart);
  report.exact(prefix + "qisgauss_q", g.q_residual);
  report.exact(prefix + "qisgauss_q11", g.q11_residual);
  report.exact(prefix + "divergence_form", g.divergence_residual);
  const PseudohermitianChart ph(chart);
  const TransResiduals t = check_qisgauss_trans(ph);
  report.exact(prefix + "qisgauss_trans_q", t.q_residual);
  report.exact(prefix + "qisgauss_trans_q11", t.q11_residual);
}

Json calibration_json(const CalibrationResult& c) {
  Json probes = Json::array();
  Json values = Json::array();
  Json poly = Json::array();
  for (const auto& e : c.epsilon_probes) probes.push_back(to_string(e));
  for (const auto& v : c.probe_values) values.push_back(str(v));
  for (const auto& a : c.interpolated_polynomial) poly.push_back(str(a));
  return {{"c", str(c.c_value)},
          {"probe_family", c.probe_family},
          {"epsilon_probes", probes},
          {"probe_values", values},
          {"interpolated_polynomial", poly}};
}

CalibrationResult run_calibration(const Options& o) {
  const auto probes = parse_rational_list(o.probes, "--probes");
  ProbeFamily family;
  if (o.family == "a44")
    family = a44_family();
  else if (o.family == "a24")
    family = a24_family();
  else
    throw domain_error("--family must be a44 or a24, got '" + o.family + "'");
  return calibrate_c(probes, family, o.order);
}

void cmd_curvature(const Options& o, Report& report) {
  const InputSpec spec = input_spec(o);
  report["input"] = input_json("curvature", o, &spec);
  const SurfaceChart chart = chart_from_input(spec);
  const PseudohermitianChart ph(chart);
  const TruncatedSeries K = gauss_curvature(chart);
  const TruncatedSeries R = scalar_curvature_R(ph);
  report["series"]["e2phi"] = series_json(chart.e2phi(), o.display_order);
  report["series"]["K"] = series_json(K, o.display_order);
  report["series"]["R"] = series_json(R, o.display_order);
  report["series"]["b"] = series_json(chart.b(), o.display_order);
  report["values"]["K_at_center"] = str(K.constant_term());
  report["values"]["R_at_center"] = str(R.constant_term());
  report.exact("K_equals_2R", K - R * GaussianRational(2));
  report.exact("levi_normalization", ph.levi_normalization_residual());
}

void cmd_invariants(const Options& o, Report& report) {
  const InputSpec spec = input_spec(o);
  report["input"] = input_json("invariants", o, &spec);
  const SurfaceChart chart = chart_from_input(spec);
  if (chart.order() < 6)
    throw insufficient_order_error("invariants need a chart of order >= 6 (got " + std::to_string(chart.order()) +
                                   "); raise --order");
  const PseudohermitianChart ph(chart);
  const TruncatedSeries K = gauss_curvature(chart);
  const TruncatedSeries R = scalar_curvature_R(ph);
  const TruncatedSeries r = cartan_r(chart);
  const TruncatedSeries s = cartan_s(chart);
  for (const auto& [name, series] : {std::pair<const char*, const TruncatedSeries&>{"K", K}, {"R", R},
                                     {"b", chart.b()}, {"r", r}, {"s", s}})
    report["series"][name] = series_json(series, o.display_order);

  const FiberPoint unit(GaussianRational(1));
  report["values"]["r_at_center"] = str(r.constant_term());
  report["values"]["s_at_center"] = str(s.constant_term());
  report["values"]["q_at_center"] = str(q_representative(ph, unit).value_at_center());
  report["values"]["q11_at_center"] = str(q11_representative(ph, unit).value_at_center());
  if (!o.lambda.empty()) {
    const FiberPoint p(parse_lambda(o.lambda));
    report["values"]["q_at_lambda"] = str(q_representative(ph, p).value_at_center());
    report["values"]["q1_at_lambda"] = str(q1_representative(ph, p).value_at_center());
    report["values"]["q11_at_lambda"] = str(q11_representative(ph, p).value_at_center());
  }

  add_chart_identities(report, "", chart);
  report.exact("K_equals_2R", K - R * GaussianRational(2));
  report.exact("levi_normalization", ph.levi_normalization_residual());
  report.exact("bracket_identity", verify_bracket_identity().residual);
  const Weight3Report w = weight3_invariance_suite(chart);
  for (const auto& check : w.checks)
    if (check.t != 1) report.exact("weight3_scaling_t=" + to_string(check.t), check.residual);

  report["verdicts"]["sphericity"] = sphericity_json(is_spherical(chart, r.order()));
  if (o.with_calibration) report["calibration"] = calibration_json(run_calibration(o));
}

void cmd_sphericity(const Options& o, Report& report) {
  const InputSpec spec = input_spec(o);
  report["input"] = input_json("sphericity", o, &spec);
  const SurfaceChart chart = chart_from_input(spec);
  if (chart.order() < 4) throw insufficient_order_error("sphericity needs a chart of order >= 4; raise --order");
  const TruncatedSeries r = cartan_r(chart);
  report["series"]["r"] = series_json(r, o.display_order);
  report["verdicts"]["sphericity"] = sphericity_json(is_spherical(chart, r.order()));
}

void cmd_calibrate(const Options& o, Report& report) {
  Json in{{"subcommand", "calibrate-c"}, {"family", o.family}, {"probes", o.probes}, {"order", o.order}};
  report["input"] = in;
  const CalibrationResult c = run_calibration(o);
  report["values"]["c"] = str(c.c_value);
  report["calibration"] = calibration_json(c);
}

Json integral_json(const Integral& i) { return {{"value", i.value}, {"error_estimate", i.error_estimate}}; }

void cmd_quadrature(const Options& o, Report& report) {
  Options local = o;
  if (local.expr.empty() && local.coeff_file.empty()) local.expr = "0";
  local.input_kind = "compact_profile_psi";
  const InputSpec spec = input_spec(local);
  report["input"] = input_json("quadrature-check", local, &spec);
  const CompactMetric metric = compact_metric_from_input(spec);
  QuadratureScheme scheme;
  scheme.identity_tolerance = o.tolerance;
  scheme.sphericity_tolerance = o.sphericity_tolerance;
  report["input"]["metric"] = metric.describe();
  report["input"]["scheme"] = {{"radial_panels", scheme.radial_panels},
                               {"points_per_panel", scheme.points_per_panel},
                               {"angular_nodes", scheme.angular_nodes},
                               {"identity_tolerance", scheme.identity_tolerance},
                               {"sphericity_tolerance", scheme.sphericity_tolerance}};

  const auto one = [](std::complex<double>) { return 1.0; };
  report["values"]["area"] = integral_json(integrate_surface(one, metric, scheme));
  report["values"]["circle_bundle_volume"] = integral_json(integrate_circle_bundle(one, metric, scheme));
  for (const CompactFunction& f : {CompactFunction::curvature(), CompactFunction::u_polynomial({0, 1}, "u")}) {
    const CalabiCheck c = calabi_identity_check(f, metric, scheme);
    report["values"]["calabi_" + f.name] = {{"lhs", integral_json(c.lhs)},
                                            {"rhs", integral_json(c.rhs)},
                                            {"relative_residual", c.relative_residual}};
    report.numeric("calabi_identity_" + f.name, c.relative_residual, scheme.identity_tolerance);
    if (c.lhs.value < -scheme.identity_tolerance) report.fail_verdict();
  }
  const RigidityReport rd = rigidity_demo(metric, scheme, std::max(spec.order, 8));
  report["verdicts"]["rigidity"] = {{"I2", rd.i2.value},
                                    {"I4", rd.i4.value},
                                    {"numeric_spherical", rd.numeric_spherical},
                                    {"symbolic_spherical", rd.symbolic_spherical},
                                    {"symbolic_verified_through", rd.symbolic_order},
                                    {"consistent", rd.consistent}};
  if (!rd.consistent) report.fail_verdict();
}

void cmd_verify(const Options& o, Report& report) {
  const BracketReport bracket = verify_bracket_identity();
  CartanCoefficients perturbed = standard_cartan_coefficients();
  perturbed.A = -(BracketPolynomial::var(BracketVar::b) +
                  BracketPolynomial(GaussianRational::i()) * BracketPolynomial::var(BracketVar::mubar));
  const bool control_detected = !bracket_residual(perturbed).is_zero();
  report.exact("bracket_identity", bracket.residual);
  report["verdicts"]["bracket_negative_control_detected"] = control_detected;
  if (!control_detected) report.fail_verdict();

  if (!o.expr.empty() || !o.coeff_file.empty()) {
    const InputSpec spec = input_spec(o);
    report["input"] = input_json("verify-identities", o, &spec);
    const SurfaceChart chart = chart_from_input(spec);
    add_chart_identities(report, "", chart);
    report.exact("K_equals_2R", gauss_curvature(chart) - scalar_curvature_R(PseudohermitianChart(chart)) * GaussianRational(2));
    return;
  }
  report["input"] = Json{{"subcommand", "verify-identities"}, {"corpus", "builtin"}, {"order", o.order}};
  const int n = o.order;
  const std::vector<std::pair<std::string, std::function<SurfaceChart()>>> corpus = {
      {"flat", [&] { return SurfaceChart(parse_expression("1", n).as_real(), ChartProvenance::direct); }},
      {"round", [&] { return SurfaceChart(parse_expression("(1+z*zb)^-2", n).as_real(), ChartProvenance::direct); }},
      {"one_plus_zzb", [&] { return SurfaceChart(parse_expression("1+z*zb", n).as_real(), ChartProvenance::direct); }},
      {"rigid_eps_1/10", [&] { return phi_from_rigid_defining(parse_expression("z*zb + 1/10*z^4*zb^4", n)); }},
      {"line_bundle_exp", [&] { return phi_from_line_bundle_metric(parse_expression("exp(-z*zb - z^2*zb^3 - z^3*zb^2)", n)); }},
  };
  for (const auto& [name, make] : corpus) add_chart_identities(report, name + ":", make());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact local invariants of CR circle bundles over Riemann surfaces", "crinv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    sub->add_option("--input-kind", o.input_kind, "line_bundle_metric_h | conformal_factor_e2phi | rigid_defining_F | compact_profile_psi")
        ->check(CLI::IsMember({"line_bundle_metric_h", "conformal_factor_e2phi", "rigid_defining_F", "compact_profile_psi"}));
    auto* e = sub->add_option("--expr", o.expr, "input expression");
    auto* f = sub->add_option("--coeff-file", o.coeff_file, "input coefficient file")->check(CLI::ExistingFile);
    e->excludes(f);
    if (needs_input) {
      auto* g = sub->add_option_group("source");
      g->add_option(e);
      g->add_option(f);
      g->require_option(1);
    }
    sub->add_option("--order", o.order, "truncation order N")->capture_default_str()->check(CLI::Range(4, 64));
    sub->add_option("--display-order", o.display_order, "highest total degree echoed in reports")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--tolerance", o.tolerance, "relative tolerance for numeric identity checks")->capture_default_str();
  };

  std::string which;
  auto* curvature = app.add_subcommand("curvature", "Gauss curvature K, Webster curvature R and connection form");
  add_common(curvature, true);
  auto* invariants = app.add_subcommand("invariants", "Cartan invariants r, s, Q and Q_{;11} with identity checks");
  add_common(invariants, true);
  invariants->add_option("--lambda", o.lambda, "fiber point lambda as re[,im]");
  invariants->add_flag("--with-calibration", o.with_calibration, "include a calibration section");
  invariants->add_option("--probes", o.probes, "epsilon probes for --with-calibration")->capture_default_str();
  auto* sphericity = app.add_subcommand("sphericity", "Test r = 0 through the available order");
  add_common(sphericity, true);
  auto* calibrate = app.add_subcommand("calibrate-c", "Determine c in s = c * (normal-form coefficient) by exact interpolation");
  add_common(calibrate, false);
  calibrate->add_option("--probes", o.probes, "comma-separated epsilon probes")->capture_default_str();
  calibrate->add_option("--family", o.family, "a44 or a24")->capture_default_str()->check(CLI::IsMember({"a44", "a24"}));
  auto* quadrature = app.add_subcommand("quadrature-check", "Numerical global checks on a compact sphere metric");
  add_common(quadrature, false);
  quadrature->add_option("--sphericity-tolerance", o.sphericity_tolerance, "absolute threshold on I2")->capture_default_str();
  auto* verify = app.add_subcommand("verify-identities", "Check every exact identity on an input or the built-in corpus");
  add_common(verify, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (calibrate->parsed() && o.order < 10) {
    err << "crinv: calibrate-c needs --order >= 10\n";
    return 1;
  }

  Report report;
  try {
    if (curvature->parsed()) cmd_curvature(o, report);
    if (invariants->parsed()) cmd_invariants(o, report);
    if (sphericity->parsed()) cmd_sphericity(o, report);
    if (calibrate->parsed()) cmd_calibrate(o, report);
    if (quadrature->parsed()) cmd_quadrature(o, report);
    if (verify->parsed()) cmd_verify(o, report);
  } catch (const inconsistency_error& e) {
    err << "crinv: identity violation: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "crinv: parse error: " << e.what() << "\n";
    return 1;
  } catch (const format_error& e) {
    err << "crinv: " << o.coeff_file << ": " << e.what() << "\n";
    return 1;
  } catch (const crinv::error& e) {
    err << "crinv: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream text;
  if (o.format == "json")
    text << report.json().dump(2) << "\n";
  else
    render_text(report.json(), text, 0);
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "crinv: cannot write " << o.out << "\n";
      return 1;
    }
    file << text.str();
  }
  return report.violated() ? 2 : 0;
}

}  // namespace crinv
