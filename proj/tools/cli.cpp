#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toric/hilbert.hpp"
#include "toric/io.hpp"
#include "toric/numeric.hpp"
#include "toric/resolution.hpp"
#include "toric/rlct.hpp"

namespace toric::cli {

namespace {

using io::Json;

enum class Format { natural, json, text };

struct Globals {
  std::string vars;
  bool json = false;
  bool text = false;
  std::string output;

  Format format() const { return json ? Format::json : text ? Format::text : Format::natural; }

  std::optional<std::vector<std::string>> variable_order() const {
    if (vars.empty()) return std::nullopt;
    std::vector<std::string> names;
    std::stringstream ss(vars);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError("--vars: empty variable name");
      names.push_back(item.substr(b, e - b + 1));
    }
    return names;
  }
};

struct PolyInput {
  std::string literal;
  std::string file;
};

LaurentPolynomial load_polynomial(const PolyInput& in, const Globals& g) {
  if (in.literal.empty() == in.file.empty())
    throw ParseError("give exactly one polynomial: a literal argument or --file PATH");
  if (!in.literal.empty()) return parse_polynomial(in.literal, g.variable_order());
  if (std::filesystem::path(in.file).extension() == ".json")
    return io::polynomial_from_json(io::read_json_file(in.file), g.variable_order());
  return parse_polynomial(io::read_text_file(in.file), g.variable_order());
}

// A path to an existing file is read; anything else is parsed as inline JSON.
Json load_json_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return io::read_json_file(arg);
  return io::parse_json(arg);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  return out;
}

std::string join(const std::vector<LatticeVector>& vs, const char* sep = "\n") {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? sep : "") + to_string(vs[i]);
  return s;
}

Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(io::to_json(v));
  return a;
}

Cone load_cone(const std::string& arg) { return io::cone_from_json(load_json_arg(arg)); }

// -------------------------------------------------------------------------

struct Output {
  Json json;
  std::string text;
  bool text_is_natural = false;  // CSV-style commands print text by default
};

Output cmd_hilbert(const std::string& cone_arg, bool with_triangulation) {
  const Cone c = load_cone(cone_arg);
  const HilbertBasis hb = hilbert_basis(c);
  Output o;
  o.json["cone"] = io::cone_to_json(c);
  o.json["hilbert_basis"] = vectors_json(hb.elements);
  o.text = join(hb.elements) + "\n";
  if (with_triangulation) {
    Json t = Json::array();
    for (const auto& piece : triangulate(c)) t.push_back(io::cone_to_json(piece));
    o.json["triangulation"] = t;
  }
  return o;
}

Json chart_json(const Cone& c) {
  Json j;
  const Cone d = dual_cone(c);
  j["cone"] = io::cone_to_json(c);
  j["dual"] = io::cone_to_json(Cone(d.ambient_dim(), d.extreme_rays()));
  if (!d.lineality().empty()) j["dual_lineality"] = vectors_json(d.lineality());
  j["pointed"] = is_pointed(c);
  if (is_pointed(c)) j["regular"] = is_regular(c);
  j["chart_ring"] = vectors_json(chart_ring_generators(c));
  return j;
}

Output cmd_dual(const std::string& arg) {
  const Json in = load_json_arg(arg);
  Output o;
  if (in.is_object() && in.contains("cones")) {
    const Fan f = io::fan_from_json(in);
    const FanReport r = fan_validate(f);
    o.json["valid"] = r.valid;
    if (r.offending) o.json["offending"] = Json::array({r.offending->first, r.offending->second});
    if (!r.valid) o.json["reason"] = r.reason;
    Json charts = Json::array();
    for (const auto& c : f.cones) charts.push_back(chart_json(c));
    o.json["charts"] = charts;
    std::ostringstream t;
    t << (r.valid ? "valid fan" : "invalid fan: " + r.reason) << "\n";
    for (std::size_t i = 0; i < f.cones.size(); ++i)
      t << i << ": " << to_string(f.cones[i]) << " chart ring " << join(chart_ring_generators(f.cones[i]), " ") << "\n";
    o.text = t.str();
    return o;
  }
  const Cone c = io::cone_from_json(in);
  o.json = chart_json(c);
  const Cone d = dual_cone(c);
  o.text = to_string(Cone(d.ambient_dim(), d.extreme_rays())) + "\n";
  return o;
}

Output cmd_newton(const LaurentPolynomial& h) {
  const NewtonPolytope np = newton_polytope(h);
  const RegularityReport reg = support_regularity_check(h);
  Output o;
  o.json["polynomial"] = io::polynomial_to_json(h);
  o.json["support"] = vectors_json(support(h));
  o.json["vertices"] = vectors_json(np.vertices);
  o.json["support_cone"] = io::cone_to_json(np.support_cone);
  Json r;
  r["rays"] = vectors_json(reg.support_rays);
  r["pointed"] = reg.pointed;
  r["simplicial"] = reg.simplicial;
  r["lower_dimensional"] = reg.lower_dimensional;
  r["index"] = io::to_json(reg.index);
  r["regular"] = reg.regular;
  r["message"] = reg.message;
  o.json["support_regularity"] = r;
  o.text = "vertices:\n" + join(np.vertices) + "\nsupport cone: " + to_string(np.support_cone) + "\n" +
           reg.message + "\n";
  return o;
}

Output cmd_initial(const LaurentPolynomial& h, const std::string& weight) {
  const std::vector<Rational> w = parse_rational_list(weight);
  if (w.size() != h.num_variables())
    throw DomainError("--weight has " + std::to_string(w.size()) + " entries for " +
                      std::to_string(h.num_variables()) + " variables");
  const LaurentPolynomial in = initial_form(h, w);
  Output o;
  Json wj = Json::array();
  for (const auto& x : w) wj.push_back(to_string(x));
  o.json["weight"] = wj;
  o.json["initial_form"] = to_string(in);
  o.text = to_string(in) + "\n";
  return o;
}

Output cmd_toric_ideal(const std::string& arg) {
  const Json in = load_json_arg(arg);
  const IntegerMatrix a = io::matrix_from_json(in.is_object() ? in.at("matrix") : in);
  const ToricIdealBasis b = toric_ideal_basis(a);
  Output o;
  o.json["matrix"] = io::to_json(a);
  o.json["kernel"] = vectors_json(b.kernel);
  Json bj = Json::array();
  std::string t;
  for (const auto& f : b.binomials) {
    bj.push_back(to_string(f));
    t += to_string(f) + "\n";
  }
  o.json["binomials"] = bj;
  o.json["label"] = ToricIdealBasis::label;
  o.text = t;
  return o;
}

struct Resolved {
  ResolutionTrace trace;
  std::vector<std::vector<ResolutionStep>> script;
  std::string provenance;
};

Resolved run_resolution(const LaurentPolynomial& h, const std::string& script_path) {
  Resolved r;
  if (!script_path.empty()) {
    r.script = io::script_from_json(io::read_json_file(script_path));
    r.provenance = "script " + std::filesystem::path(script_path).filename().string();
  } else {
    const auto s = suggest_map_detailed(h);
    if (!s) {
      r.trace = resolve(h, std::vector<ResolutionStep>{});
      r.trace.warnings.push_back("suggest_map found no unimodular chart; supply --script");
      r.provenance = "suggest_map (no candidate)";
      return r;
    }
    std::vector<ResolutionStep> steps;
    if (s->matrix != IntegerMatrix::identity(h.num_variables())) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < h.num_variables(); ++i) names.push_back("u" + std::to_string(i + 1));
      steps.push_back(MonomialStep{s->matrix, names});
    }
    r.script = {steps};
    r.provenance = "suggest_map";
  }
  r.trace = resolve(h, r.script);
  if (r.provenance == "suggest_map" && !r.script.front().empty())
    r.trace.warnings.push_back(
        "single chart chosen by suggest_map; its pole bounds lambda1 from above unless the chart "
        "covers a neighbourhood of the singularity");
  return r;
}

void incomplete(const ResolutionTrace& t, std::ostream& err) {
  err << "error: resolution incomplete\n";
  for (std::size_t i = 0; i < t.charts.size(); ++i) {
    const NormalCrossingReport nc = is_normal_crossing(t.charts[i]);
    if (nc.normal_crossing) continue;
    err << "  chart " << i << ": " << nc.reason << "\n";
    for (const auto& p : nc.zero_candidates) {
      err << "    near zero at (";
      for (std::size_t k = 0; k < p.size(); ++k) err << (k ? "," : "") << p[k];
      err << ")\n";
    }
  }
}

Output cmd_resolve(const LaurentPolynomial& h, const std::string& script, std::ostream& err, int& code) {
  const Resolved r = run_resolution(h, script);
  Output o;
  o.json = io::trace_to_json(r.trace);
  o.json["script"] = io::script_to_json(r.script)["charts"];
  o.json["provenance"] = r.provenance;
  std::ostringstream t;
  for (std::size_t i = 0; i < r.trace.charts.size(); ++i) {
    const ChartState& c = r.trace.charts[i];
    t << "chart " << i << "\n";
    for (const auto& s : c.history) t << "  " << s.step << ": " << to_string(s.expression) << "\n";
    t << "  = " << to_string(c.prefactor_monomial()) << " * (" << to_string(c.cofactor()) << ")\n";
    t << "  jacobian " << to_string(c.jacobian) << "\n";
  }
  for (const auto& w : r.trace.warnings) t << "warning: " << w << "\n";
  o.text = t.str();
  if (!r.trace.complete) {
    incomplete(r.trace, err);
    code = incomplete_resolution;
  }
  return o;
}

Output cmd_rlct(const LaurentPolynomial& h, const std::string& script, std::ostream& err, int& code) {
  const Resolved r = run_resolution(h, script);
  for (const auto& w : r.trace.warnings) err << "warning: " << w << "\n";
  if (!r.trace.complete) {
    incomplete(r.trace, err);
    code = incomplete_resolution;
    Output o;
    o.json = io::trace_to_json(r.trace);
    o.text = "resolution incomplete\n";
    return o;
  }
  std::vector<PoleSpectrum> spectra;
  for (const auto& c : r.trace.charts) spectra.push_back(chart_poles(c));
  const RlctReport rep = aggregate(spectra, r.provenance);
  const bool bound = half_dim_bound_check(rep, h.num_variables());
  if (!bound) err << "warning: lambda1 = " << to_string(rep.lambda1) << " exceeds d/2 for d = " << h.num_variables() << "\n";
  Output o;
  o.json = io::report_to_json(rep, bound);
  o.text = "lambda1 " + to_string(rep.lambda1) + "\nm1 " + std::to_string(rep.m1) + "\n";
  return o;
}

Output cmd_curve(const std::string& report_arg, const std::string& n_list, int digits) {
  const RlctReport rep = io::report_from_json(load_json_arg(report_arg));
  Output o;
  o.text_is_natural = true;
  std::ostringstream t;
  t << "n,K,G_shape\n";
  Json rows = Json::array();
  std::stringstream ss(n_list);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    Decimal n;
    try {
      n = Decimal(item.substr(b));
    } catch (const std::exception&) {
      throw ParseError("--n: not a number: \"" + item + "\"");
    }
    const std::string k = to_string(learning_curve(rep, n), digits);
    const std::string g = n >= 3 ? to_string(stochastic_complexity_bound(rep, n), digits) : "";
    const std::string ns = to_string(n, digits);
    t << ns << "," << k << "," << g << "\n";
    Json row;
    row["n"] = ns;
    row["K"] = k;
    row["G_shape"] = g.empty() ? Json(nullptr) : Json(g);
    rows.push_back(row);
  }
  o.json["lambda1"] = to_string(rep.lambda1);
  o.json["m1"] = rep.m1;
  o.json["rows"] = rows;
  o.text = t.str();
  return o;
}

Output cmd_cone_iso(const std::string& a, const std::string& b) {
  const Cone c1 = load_cone(a), c2 = load_cone(b);
  const auto iso = cone_isomorphism(c1, c2);
  Output o;
  o.json["isomorphic"] = iso.has_value();
  o.json["witness"] = iso ? io::to_json(iso->matrix) : Json(nullptr);
  if (iso) o.json["projected"] = iso->projected;
  o.text = iso ? "isomorphic, witness " + to_string(iso->matrix) + "\n" : "not isomorphic\n";
  return o;
}

Output cmd_verify(const LaurentPolynomial& h, const std::string& spec_path, const std::string& expect,
                  const std::string& report_path, double tolerance, std::ostream& err, int& code) {
  QuadratureSpec spec = spec_path.empty() ? QuadratureSpec::unit_box(h.num_variables())
                                          : io::quadrature_from_json(io::read_json_file(spec_path));
  const auto samples = estimate_free_energy(h, spec);
  const LambdaFit fit = fit_lambda(samples);
  std::optional<Rational> exact;
  if (!expect.empty()) exact = parse_rational(expect);
  if (!report_path.empty()) exact = io::report_from_json(io::read_json_file(report_path)).lambda1;

  Output o;
  const int digits = std::min(spec.digits, 17);
  auto num = [&](double x) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
  };
  std::ostringstream t;
  t << "n,F\n";
  Json sj = Json::array();
  for (const auto& s : samples) {
    t << num(s.n) << "," << num(s.free_energy) << "\n";
    Json row;
    row["n"] = s.n;
    row["F"] = num(s.free_energy);
    sj.push_back(row);
  }
  Json fj;
  fj["lambda_hat"] = num(fit.lambda_hat);
  fj["m_minus_1"] = num(fit.m_minus_1);
  fj["intercept"] = num(fit.intercept);
  fj["residual_rms"] = num(fit.residual_rms);
  fj["used_log_log"] = fit.used_log_log;
  Json notes = Json::array();
  if (std::fabs(fit.lambda_hat) < 0.01) notes.push_back("no singularity");
  fj["notes"] = notes;
  if (exact) {
    const double diff = std::fabs(fit.lambda_hat - to_double(*exact));
    fj["lambda_exact"] = to_string(*exact);
    fj["tolerance"] = tolerance;
    fj["within_tolerance"] = diff <= tolerance;
    if (diff > tolerance) {
      err << "error: fitted lambda " << num(fit.lambda_hat) << " differs from " << to_string(*exact)
          << " by more than " << tolerance << "\n";
      code = verification_mismatch;
    }
  }
  o.json["spec"] = io::quadrature_to_json(spec);
  o.json["samples"] = sj;
  o.json["fit"] = fj;
  o.text = t.str() + fj.dump() + "\n";
  o.text_is_natural = true;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice cones, Hilbert bases and toric resolution of singular polynomials", "toric"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--vars", g.vars, "Variable order, e.g. a,b,c");
  auto* jf = app.add_flag("--json", g.json, "JSON output");
  auto* tf = app.add_flag("--text", g.text, "Plain text output");
  jf->excludes(tf);
  app.add_option("--output", g.output, "Write the result to PATH instead of stdout");

  PolyInput poly;
  std::string cone_a, cone_b, script, weight, report, n_list, spec_path, expect, matrix;
  bool triangulation = false;
  int digits = 20;
  double tolerance = 0.08;
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("polynomial", poly.literal, "Polynomial literal");
    sub->add_option("--file", poly.file, "Polynomial file (text or {\"variables\",\"polynomial\"} JSON)");
  };

  auto* hil = app.add_subcommand("hilbert", "Hilbert basis of a pointed cone");
  hil->add_option("cone", cone_a, "Cone file or inline JSON")->required();
  hil->add_flag("--triangulation", triangulation, "Also print the placing triangulation");
  auto* dual = app.add_subcommand("dual", "Dual cone and chart ring; fan files are validated");
  dual->add_option("cone", cone_a, "Cone or fan file")->required();
  auto* newton = app.add_subcommand("newton", "Newton polytope and support cone");
  add_poly(newton);
  auto* initial = app.add_subcommand("initial", "Initial form for a weight vector");
  add_poly(initial);
  initial->add_option("--weight", weight, "Comma separated rationals")->required();
  auto* ideal = app.add_subcommand("toric-ideal", "Lattice-basis binomials of a toric ideal");
  ideal->add_option("matrix", matrix, "Exponent matrix file or inline JSON")->required();
  auto* res = app.add_subcommand("resolve", "Apply a resolution script and print the trace");
  add_poly(res);
  res->add_option("--script", script, "Script file; suggest_map is used when absent");
  auto* rl = app.add_subcommand("rlct", "Learning coefficient and multiplicity");
  add_poly(rl);
  rl->add_option("--script", script, "Script file; suggest_map is used when absent");
  auto* curve = app.add_subcommand("curve", "Learning curve samples from a report");
  curve->add_option("report", report, "Report file or inline JSON")->required();
  curve->add_option("--n", n_list, "Comma separated sample sizes");
  curve->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 45));
  auto* iso = app.add_subcommand("cone-iso", "Unimodular isomorphism between two cones");
  iso->add_option("first", cone_a, "Cone file")->required();
  iso->add_option("second", cone_b, "Cone file")->required();
  auto* ver = app.add_subcommand("verify", "Numeric estimate of lambda from the decay of Z(n)");
  add_poly(ver);
  ver->add_option("--spec", spec_path, "Quadrature spec JSON (default: unit box)");
  ver->add_option("--expect", expect, "Exact lambda to compare against");
  ver->add_option("--report", report, "Report whose lambda1 is compared against");
  ver->add_option("--tolerance", tolerance, "Allowed |lambda_hat - lambda|");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? ok : parse_error;
  }

  int code = ok;
  try {
    Output o;
    if (hil->parsed()) o = cmd_hilbert(cone_a, triangulation);
    else if (dual->parsed()) o = cmd_dual(cone_a);
    else if (newton->parsed()) o = cmd_newton(load_polynomial(poly, g));
    else if (initial->parsed()) o = cmd_initial(load_polynomial(poly, g), weight);
    else if (ideal->parsed()) o = cmd_toric_ideal(matrix);
    else if (res->parsed()) o = cmd_resolve(load_polynomial(poly, g), script, err, code);
    else if (rl->parsed()) o = cmd_rlct(load_polynomial(poly, g), script, err, code);
    else if (curve->parsed()) o = cmd_curve(report, n_list, digits);
    else if (iso->parsed()) o = cmd_cone_iso(cone_a, cone_b);
    else if (ver->parsed()) o = cmd_verify(load_polynomial(poly, g), spec_path, expect, report, tolerance, err, code);

    const bool as_text = g.format() == Format::text || (g.format() == Format::natural && o.text_is_natural);
    const std::string body = as_text ? o.text : o.json.dump(2) + "\n";
    if (g.output.empty()) {
      out << body;
    } else {
      std::ofstream f(g.output, std::ios::binary);
      if (!f) throw ParseError("cannot write " + g.output);
      f << body;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what();
    if (e.position() != ParseError::npos && std::string(e.what()).find("position") == std::string::npos)
      err << " (position " << e.position() << ")";
    err << "\n";
    return parse_error;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return domain_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return code;
}

}  // namespace toric::cli
