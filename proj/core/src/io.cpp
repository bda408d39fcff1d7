#include "toric/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace toric::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) fail(std::string(where) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) fail(std::string(where) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::filesystem::path& path) { return parse_json(read_text_file(path)); }

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntegerMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) fail("expected an integer, got \"" + j.get<std::string>() + "\"");
    return numerator(q);
  }
  fail("expected an integer, got " + j.dump());
}

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an integer array, got " + j.dump());
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return LatticeVector(std::move(v));
}

IntegerMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty matrix (array of rows)");
  std::vector<LatticeVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail("matrix rows have different lengths");
  return IntegerMatrix::from_rows(rows);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  fail("expected a rational string \"p/q\", got " + j.dump());
}

LaurentPolynomial polynomial_from_json(const Json& j,
                                       const std::optional<std::vector<std::string>>& variable_order) {
  const std::string text = string_field(j, "polynomial", "polynomial file");
  if (variable_order) return parse_polynomial(text, variable_order);
  if (!j.contains("variables")) return parse_polynomial(text);
  const Json& names = j["variables"];
  if (!names.is_array()) fail("polynomial file: \"variables\" must be an array of names");
  std::vector<std::string> order;
  for (const auto& n : names) {
    if (!n.is_string()) fail("polynomial file: variable names must be strings");
    order.push_back(n.get<std::string>());
  }
  return parse_polynomial(text, order);
}

Json polynomial_to_json(const LaurentPolynomial& f) {
  Json j;
  Json names = Json::array();
  for (const auto& v : f.variables()) names.push_back(v);
  j["variables"] = names;
  j["polynomial"] = to_string(f);
  return j;
}

Json cone_to_json(const Cone& c) {
  Json j;
  j["ambient_dim"] = c.ambient_dim();
  Json g = Json::array();
  for (const auto& v : c.generators()) g.push_back(to_json(v));
  j["generators"] = g;
  return j;
}

Cone cone_from_json(const Json& j) {
  const Json& dim = field(j, "ambient_dim", "cone");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    fail("cone: \"ambient_dim\" must be a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  const Json& gens = field(j, "generators", "cone");
  if (!gens.is_array()) fail("cone: \"generators\" must be an array");
  std::vector<LatticeVector> g;
  for (const auto& x : gens) {
    g.push_back(vector_from_json(x));
    if (g.back().size() != n) fail("cone: generator " + x.dump() + " does not have ambient_dim entries");
  }
  return Cone(n, g);
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["ambient_dim"] = f.ambient_dim;
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back(cone_to_json(c));
  j["cones"] = cones;
  return j;
}

Fan fan_from_json(const Json& j) {
  const Json& cones = field(j, "cones", "fan");
  if (!cones.is_array() || cones.empty()) fail("fan: \"cones\" must be a non-empty array");
  Fan f;
  for (const auto& c : cones) {
    Json cj = c;
    if (!cj.contains("ambient_dim") && j.contains("ambient_dim")) cj["ambient_dim"] = j["ambient_dim"];
    f.cones.push_back(cone_from_json(cj));
  }
  f.ambient_dim = f.cones.front().ambient_dim();
  for (const auto& c : f.cones)
    if (c.ambient_dim() != f.ambient_dim) fail("fan: cones live in different dimensions");
  return f;
}

namespace {

ResolutionStep step_from_json(const Json& j) {
  const std::string type = string_field(j, "type", "script step");
  if (type == "monomial") {
    MonomialStep s;
    s.matrix = matrix_from_json(field(j, "matrix", "monomial step"));
    const Json& names = field(j, "new_vars", "monomial step");
    if (!names.is_array()) fail("monomial step: \"new_vars\" must be an array of names");
    for (const auto& n : names) {
      if (!n.is_string()) fail("monomial step: variable names must be strings");
      s.new_vars.push_back(n.get<std::string>());
    }
    return s;
  }
  if (type == "translate") {
    TranslateStep s;
    s.var = string_field(j, "var", "translate step");
    s.offset = rational_from_json(field(j, "offset", "translate step"));
    if (j.contains("new_var")) s.new_var = string_field(j, "new_var", "translate step");
    return s;
  }
  fail("script step: unknown type \"" + type + "\"");
}

std::vector<ResolutionStep> chart_from_json(const Json& j) {
  if (!j.is_array()) fail("script: a chart must be an array of steps");
  std::vector<ResolutionStep> steps;
  for (const auto& s : j) steps.push_back(step_from_json(s));
  return steps;
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

std::vector<std::vector<ResolutionStep>> script_from_json(const Json& j) {
  if (j.is_array()) return {chart_from_json(j)};
  const Json& charts = field(j, "charts", "script");
  if (!charts.is_array() || charts.empty()) fail("script: \"charts\" must be a non-empty array");
  std::vector<std::vector<ResolutionStep>> out;
  for (const auto& c : charts) out.push_back(chart_from_json(c));
  return out;
}

Json step_to_json(const ResolutionStep& step) {
  Json j;
  if (const auto* m = std::get_if<MonomialStep>(&step)) {
    j["type"] = "monomial";
    j["matrix"] = to_json(m->matrix);
    j["new_vars"] = strings(m->new_vars);
  } else {
    const auto& t = std::get<TranslateStep>(step);
    j["type"] = "translate";
    j["var"] = t.var;
    j["offset"] = to_string(t.offset);
    if (!t.new_var.empty()) j["new_var"] = t.new_var;
  }
  return j;
}

Json script_to_json(const std::vector<std::vector<ResolutionStep>>& charts) {
  Json all = Json::array();
  for (const auto& c : charts) {
    Json a = Json::array();
    for (const auto& s : c) a.push_back(step_to_json(s));
    all.push_back(a);
  }
  Json j;
  j["charts"] = all;
  return j;
}

Json trace_to_json(const ResolutionTrace& trace) {
  Json j;
  j["complete"] = trace.complete;
  j["warnings"] = strings(trace.warnings);
  Json charts = Json::array();
  for (const auto& c : trace.charts) {
    const NormalCrossingReport nc = is_normal_crossing(c);
    Json cj;
    cj["variables"] = strings(c.variables());
    Json steps = Json::array();
    for (const auto& s : c.steps) steps.push_back(step_to_json(s));
    cj["steps"] = steps;
    cj["prefactor"] = to_json(c.prefactor);
    cj["prefactor_monomial"] = to_string(c.prefactor_monomial());
    cj["jacobian"] = to_json(c.jacobian);
    cj["unit"] = to_string(c.unit);
    cj["residual"] = to_string(c.residual);
    cj["normal_crossing"] = nc.normal_crossing;
    if (!nc.normal_crossing) {
      cj["reason"] = nc.reason;
      Json z = Json::array();
      for (const auto& p : nc.zero_candidates) z.push_back(p);
      cj["zero_candidates"] = z;
    }
    cj["notes"] = strings(c.notes);
    Json hist = Json::array();
    for (const auto& h : c.history) {
      Json hj;
      hj["step"] = h.step;
      hj["expression"] = to_string(h.expression);
      hj["prefactor"] = to_json(h.prefactor);
      hj["jacobian"] = to_json(h.jacobian);
      hj["unit"] = to_string(h.unit);
      hj["residual"] = to_string(h.residual);
      hist.push_back(hj);
    }
    cj["history"] = hist;
    charts.push_back(cj);
  }
  j["charts"] = charts;
  return j;
}

Json report_to_json(const RlctReport& report, bool bound_d_over_2) {
  Json j;
  j["lambda1"] = to_string(report.lambda1);
  j["m1"] = report.m1;
  Json charts = Json::array();
  for (const auto& s : report.charts) {
    Json cj;
    cj["lambda"] = s.lambda ? Json(to_string(*s.lambda)) : Json(nullptr);
    cj["multiplicity"] = s.multiplicity;
    Json cands = Json::array();
    for (const auto& c : s.candidates) cands.push_back(Json::array({to_string(c.lambda), c.name}));
    cj["candidates"] = cands;
    cj["unit_at_origin"] = to_string(s.unit_at_origin);
    charts.push_back(cj);
  }
  j["charts"] = charts;
  j["bound_d_over_2"] = bound_d_over_2;
  if (!report.provenance.empty()) j["provenance"] = report.provenance;
  return j;
}

RlctReport report_from_json(const Json& j) {
  RlctReport r;
  r.lambda1 = rational_from_json(field(j, "lambda1", "report"));
  const Json& m = field(j, "m1", "report");
  if (!m.is_number_unsigned() || m.get<std::size_t>() == 0) fail("report: \"m1\" must be a positive integer");
  r.m1 = m.get<std::size_t>();
  if (r.lambda1 <= 0) fail("report: \"lambda1\" must be positive");
  if (j.contains("charts")) {
    const Json& charts = j["charts"];
    if (!charts.is_array()) fail("report: \"charts\" must be an array");
    for (const auto& c : charts) {
      PoleSpectrum s;
      if (c.contains("lambda") && !c["lambda"].is_null()) s.lambda = rational_from_json(c["lambda"]);
      if (c.contains("multiplicity")) s.multiplicity = integer_from_json(c["multiplicity"]).convert_to<std::size_t>();
      if (c.contains("candidates")) {
        for (const auto& p : c["candidates"]) {
          if (!p.is_array() || p.size() != 2 || !p[1].is_string())
            fail("report: candidates must be [\"p/q\", \"name\"] pairs");
          s.candidates.push_back({rational_from_json(p[0]), s.candidates.size(), p[1].get<std::string>()});
        }
      }
      if (c.contains("unit_at_origin")) s.unit_at_origin = rational_from_json(c["unit_at_origin"]);
      r.charts.push_back(std::move(s));
    }
  }
  if (j.contains("provenance") && j["provenance"].is_string()) r.provenance = j["provenance"].get<std::string>();
  return r;
}

QuadratureSpec quadrature_from_json(const Json& j) {
  QuadratureSpec s;
  const Json& box = field(j, "box", "quadrature spec");
  if (!box.is_array()) fail("quadrature spec: \"box\" must be an array of [lo, hi] pairs");
  for (const auto& b : box) {
    if (!b.is_array() || b.size() != 2) fail("quadrature spec: box entries must be [lo, hi] pairs");
    s.box.emplace_back(rational_from_json(b[0]), rational_from_json(b[1]));
  }
  if (j.contains("points_per_axis")) {
    if (!j["points_per_axis"].is_number_unsigned()) fail("quadrature spec: \"points_per_axis\" must be a positive integer");
    s.points_per_axis = j["points_per_axis"].get<std::size_t>();
  }
  if (j.contains("refine")) {
    if (!j["refine"].is_number()) fail("quadrature spec: \"refine\" must be a number");
    s.refine = j["refine"].get<double>();
  }
  if (j.contains("n")) {
    if (!j["n"].is_array()) fail("quadrature spec: \"n\" must be an array");
    s.n_values.clear();
    for (const auto& n : j["n"]) {
      if (!n.is_number()) fail("quadrature spec: n values must be numbers");
      s.n_values.push_back(n.get<double>());
    }
  }
  if (j.contains("digits")) {
    if (!j["digits"].is_number_integer()) fail("quadrature spec: \"digits\" must be an integer");
    s.digits = j["digits"].get<int>();
  }
  if (j.contains("method")) {
    const std::string m = string_field(j, "method", "quadrature spec");
    if (m == "grid") s.method = QuadratureMethod::grid;
    else if (m == "monte_carlo") s.method = QuadratureMethod::monte_carlo;
    else fail("quadrature spec: unknown method \"" + m + "\"");
  }
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("samples")) s.samples = j["samples"].get<std::size_t>();
  return s;
}

Json quadrature_to_json(const QuadratureSpec& spec) {
  Json j;
  Json box = Json::array();
  for (const auto& [lo, hi] : spec.box) box.push_back(Json::array({to_string(lo), to_string(hi)}));
  j["box"] = box;
  j["points_per_axis"] = spec.points_per_axis;
  j["refine"] = spec.refine;
  j["n"] = spec.n_values;
  j["digits"] = spec.digits;
  if (spec.method == QuadratureMethod::monte_carlo) {
    j["method"] = "monte_carlo";
    j["seed"] = spec.seed;
    j["samples"] = spec.samples;
  }
  return j;
}

}  // namespace toric::io
