// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../tools/cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "toric/hilbert.hpp"
#include "toric/rlct.hpp"

using namespace toric;
using toric::testing::fixture;
using toric::testing::fixture_polynomial;
using toric::testing::fixture_script;

namespace {

// Pinned limits.
constexpr double kFastSeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kVerifySeconds = 60.0;
constexpr double kMonomialTolerance = 0.05;
constexpr double kSecondAppTolerance = 0.08;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult toric_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void check(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_time(Outcome& o, std::chrono::steady_clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "took " << s << " s (limit " << limit << " s)";
  check(o, s < limit, os.str());
}

std::vector<LatticeVector> to_lattice(const std::vector<oracle::Vec>& gens) {
  std::vector<LatticeVector> out;
  for (const auto& g : gens) out.push_back(oracle::from_vec(g));
  return out;
}

RlctReport report_for(const LaurentPolynomial& h, const std::vector<std::vector<ResolutionStep>>& script) {
  const auto trace = resolve(h, script);
  std::vector<PoleSpectrum> spectra;
  for (const auto& c : trace.charts) spectra.push_back(chart_poles(c));
  return aggregate(spectra);
}

Outcome second_application() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r =
      toric_cli({"--json", "rlct", "--file", fixture("app_b/h.json"), "--script", fixture("app_b/map.json")});
  check(o, r.code == cli::ok, "rlct exit " + std::to_string(r.code) + ": " + r.err);
  if (!o.pass) return o;
  const auto report = io::parse_json(r.out);
  check(o, report["lambda1"] == "3/4", "lambda1 = " + report["lambda1"].dump());
  check(o, report["m1"] == 1, "m1 = " + report["m1"].dump());

  const auto c = toric_cli({"curve", r.out, "--n", "10,100,1000"});
  check(o, c.code == cli::ok, "curve exit " + std::to_string(c.code));
  std::istringstream rows(c.out);
  std::string line;
  std::getline(rows, line);
  check(o, line == "n,K,G_shape", "curve header " + line);
  int seen = 0;
  while (std::getline(rows, line)) {
    std::istringstream cells(line);
    std::string n, k, g;
    std::getline(cells, n, ',');
    std::getline(cells, k, ',');
    std::getline(cells, g, ',');
    const Decimal dn(n);
    check(o, Decimal(k) == Decimal(3) / 4 / dn, "K(" + n + ") = " + k);
    // m1 = 1, so the shape is exactly (3/4) ln n.
    const double expect = 0.75 * std::log(std::stod(n));
    check(o, std::fabs(std::stod(g) - expect) <= 1e-14 * expect, "G_shape(" + n + ") = " + g);
    ++seen;
  }
  check(o, seen == 3, "curve rows " + std::to_string(seen));
  check_time(o, t0, kFastSeconds);
  if (o.pass) o.detail = "lambda1=3/4 m1=1, G_shape=0.75*ln n";
  return o;
}

Outcome first_application() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> u{"u1", "u2", "u3"};
  const auto u1 = LaurentPolynomial::variable(u, "u1");
  const auto u2 = LaurentPolynomial::variable(u, "u2");
  const auto u3 = LaurentPolynomial::variable(u, "u3");
  const auto one = LaurentPolynomial::constant(u, 1);

  const auto intermediate = parse_polynomial("u1^4*u2^4*u3^2 + 2*u1^3*u2^4*u3 + u1^2*u2^4 + 3*u1^6*u2^6*u3^4", u);
  const auto prefactor = parse_polynomial("u1^2*u2^4", u);
  const auto factor = pow(u1 * u3 + one, 2) + Rational(3) * pow(u1, 4) * pow(u2, 2) * pow(u3, 4);

  const auto t1 = resolve(fixture_polynomial("app_a/h.json"), fixture_script("app_a/stage1.json"));
  const auto& hist = t1.charts[0].history;
  check(o, hist.size() >= 2, "stage 1 history too short");
  if (!o.pass) return o;
  const auto& after = hist[1];
  check(o, to_string(after.expression) == to_string(intermediate), "intermediate " + to_string(after.expression));
  const auto pm = LaurentPolynomial::monomial(after.expression.variables(), after.prefactor);
  check(o, to_string(pm) == to_string(prefactor), "prefactor " + to_string(pm));
  const auto cof = after.unit * after.residual;
  check(o, to_string(cof) == to_string(factor), "factor " + to_string(cof));

  const auto t2 = resolve(fixture_polynomial("app_a/h2.json"), fixture_script("app_a/stage2.json"));
  check(o, t2.complete, "stage 2 not normal crossing");
  const auto& c = t2.charts[0];
  const std::vector<std::string> s{"c1", "s1", "s2", "s3"};
  check(o, to_string(c.prefactor_monomial()) == to_string(parse_polynomial("c1^2*s1^2", s)),
        "terminal prefactor " + to_string(c.prefactor_monomial()));
  check(o, to_string(c.cofactor()) == to_string(parse_polynomial("1 + 3*s1^4*s2^10", s)),
        "terminal unit " + to_string(c.cofactor()));
  check_time(o, t0, kFastSeconds);
  if (o.pass) o.detail = "intermediate, factored pair and c1^2*s1^2*(" + to_string(c.cofactor()) + ") match";
  return o;
}

Outcome second_application_hilbert() {
  Outcome o;
  const auto r = toric_cli({"--json", "hilbert", fixture("app_b/cone.json")});
  check(o, r.code == cli::ok, "hilbert exit " + std::to_string(r.code));
  if (!o.pass) return o;
  const auto got = io::parse_json(r.out)["hilbert_basis"];
  const auto want = io::parse_json("[[0,0,1],[1,1,1],[1,2,0]]");
  check(o, got == want, "hilbert basis " + got.dump());
  if (o.pass) o.detail = got.dump();
  return o;
}

Outcome hilbert_oracle() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  int agree = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 3;  // 2, 3, 4
    const auto gens = oracle::random_pointed_cone(rng, d, -4, 4);
    const Cone c(d, to_lattice(gens));
    const auto got = hilbert_basis(c).elements;
    const auto want = oracle::hilbert_basis(gens, d);
    check(o, got == want, "mismatch on " + to_string(c));
    agree += got == want;
  }
  check_time(o, t0, kOracleSeconds);
  if (o.pass) o.detail = std::to_string(agree) + "/50 cones agree";
  return o;
}

Outcome duality_involution() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 3;
    const auto gens = oracle::random_pointed_cone(rng, d, -4, 4);
    const Cone c(d, to_lattice(gens));
    const Cone dd = dual_cone(dual_cone(c));
    const bool same = dd.extreme_rays() == c.extreme_rays() && dd.lineality().empty();
    check(o, same, "dual(dual) differs on " + to_string(c));
    agree += same;
  }
  if (o.pass) o.detail = std::to_string(agree) + "/100 exact";
  return o;
}

Outcome minkowski_product() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  const std::vector<std::string> vars{"x", "y", "z"};
  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    const std::vector<std::string> v(vars.begin(), vars.begin() + 1 + t % 3);
    LaurentPolynomial f, g;
    do f = oracle::random_polynomial(rng, v, 5, 4);
    while (f.is_zero());
    do g = oracle::random_polynomial(rng, v, 5, 4);
    while (g.is_zero());
    std::vector<LatticeVector> sums;
    for (const auto& a : newton_polytope(f).vertices)
      for (const auto& b : newton_polytope(g).vertices) sums.push_back(a + b);
    const bool same = newton_polytope(f * g).vertices == oracle::hull_vertices(sums);
    check(o, same, "New(f*g) differs for f=" + to_string(f) + ", g=" + to_string(g));
    agree += same;
  }
  if (o.pass) o.detail = std::to_string(agree) + "/100 exact";
  return o;
}

Outcome jacobian_formula() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 3);
  int agree = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + t % 3;
    const IntegerMatrix a = oracle::random_unimodular(rng, d, true);
    std::vector<std::string> old_vars, new_vars;
    for (std::size_t i = 0; i < d; ++i) {
      old_vars.push_back("x" + std::to_string(i + 1));
      new_vars.push_back("u" + std::to_string(i + 1));
    }
    // det(A) * prod u_i^(s_i - 1), s_i the row sums.
    LatticeVector s(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) s[i] += a(i, j);
      s[i] -= 1;
    }
    const auto formula = LaurentPolynomial::monomial(new_vars, s, Rational(determinant(a)));
    const auto symbolic = oracle::jacobian_determinant(a, new_vars);
    const auto chart = apply_step(ChartState::initial(LaurentPolynomial::constant(old_vars, 1)),
                                  MonomialStep{a, new_vars});
    const bool same = symbolic == formula && chart.jacobian == s;
    check(o, same, "Jacobian differs for " + to_string(a));
    agree += same;
  }
  if (o.pass) o.detail = std::to_string(agree) + "/50 exact";
  return o;
}

Outcome regular_models() {
  Outcome o;
  std::string seen;
  for (int d = 1; d <= 5; ++d) {
    const std::string dir = "regular/d" + std::to_string(d) + "/";
    const auto r = report_for(fixture_polynomial(dir + "h.json"), fixture_script(dir + "radial.json"));
    check(o, r.lambda1 == Rational(d, 2) && r.m1 == 1,
          "d=" + std::to_string(d) + ": lambda1=" + to_string(r.lambda1) + " m1=" + std::to_string(r.m1));
    seen += (d > 1 ? " " : "") + to_string(r.lambda1);
  }
  if (o.pass) o.detail = "lambda1 = " + seen + ", m1 = 1";
  return o;
}

Outcome half_dimension() {
  Outcome o;
  struct Case {
    std::string h, script;
  };
  std::vector<Case> cases{{"app_a/h2.json", "app_a/stage2.json"}, {"app_b/h.json", "app_b/map.json"}};
  for (const char* c : {"k1_n1_m1", "k2_n2_m1", "k2_n1_m2"})
    cases.push_back({std::string("app_c/") + c + "/h.json", std::string("app_c/") + c + "/chart.json"});
  for (int d = 1; d <= 5; ++d) {
    const std::string dir = "regular/d" + std::to_string(d) + "/";
    cases.push_back({dir + "h.json", dir + "radial.json"});
  }
  std::size_t checked = 0;
  for (const auto& c : cases) {
    const auto h = fixture_polynomial(c.h);
    const auto r = report_for(h, fixture_script(c.script));
    check(o, half_dim_bound_check(r, h.num_variables()), c.h + ": lambda1=" + to_string(r.lambda1));
    ++checked;
  }
  // Fixtures without a script go through the suggested map when it resolves them.
  for (const char* f : {"numeric/monomial.json", "app_a/h.json"}) {
    const auto h = fixture_polynomial(f);
    const auto m = suggest_map(h);
    if (!m) continue;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < h.num_variables(); ++i) names.push_back("y" + std::to_string(i + 1));
    const std::vector<std::vector<ResolutionStep>> script{{MonomialStep{*m, names}}};
    if (!resolve(h, script).complete) continue;
    const auto r = report_for(h, script);
    check(o, half_dim_bound_check(r, h.num_variables()), std::string(f) + ": lambda1=" + to_string(r.lambda1));
    ++checked;
  }
  if (o.pass) o.detail = "lambda1 <= d/2 on " + std::to_string(checked) + " fixtures";
  return o;
}

Outcome third_application() {
  Outcome o;
  std::string seen;
  for (const char* c : {"k1_n1_m1", "k2_n2_m1", "k2_n1_m2"}) {
    const std::string dir = std::string("app_c/") + c + "/";
    const auto j = io::read_json_file(fixture(dir + "h.json"));
    const int k = j["shape"]["K"], n = j["shape"]["N"], m = j["shape"]["M"];
    const auto r = report_for(io::polynomial_from_json(j), fixture_script(dir + "chart.json"));
    const Rational bound = Rational(k, 2) * std::min(n, m + 1);
    check(o, r.lambda1 <= bound, std::string(c) + ": " + to_string(r.lambda1) + " > " + to_string(bound));
    seen += std::string(seen.empty() ? "" : ", ") + "(" + std::to_string(k) + "," + std::to_string(n) + "," +
            std::to_string(m) + ") " + to_string(r.lambda1) + "<=" + to_string(bound);
  }
  if (o.pass) o.detail = seen;
  return o;
}

Outcome numeric_agreement() {
  Outcome o;
  struct Case {
    std::string h, spec, expect;
    double tolerance;
  };
  const std::vector<Case> cases{{"numeric/monomial.json", "numeric/quadrature_2d.json", "0.25", kMonomialTolerance},
                                {"app_b/h.json", "app_b/quadrature.json", "0.75", kSecondAppTolerance}};
  std::string seen;
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream tol;
    tol << c.tolerance;
    const auto r = toric_cli({"--json", "verify", "--file", fixture(c.h), "--spec", fixture(c.spec), "--expect",
                              c.expect, "--tolerance", tol.str()});
    check(o, r.code == cli::ok, c.h + ": verify exit " + std::to_string(r.code) + " " + r.err);
    if (r.code == cli::ok || r.code == cli::verification_mismatch) {
      const double got = std::stod(io::parse_json(r.out)["fit"]["lambda_hat"].get<std::string>());
      check(o, std::fabs(got - std::stod(c.expect)) <= c.tolerance, c.h + ": lambda_hat " + std::to_string(got));
      seen += std::string(seen.empty() ? "" : ", ") + c.expect + " -> " + std::to_string(got);
    }
    check_time(o, t0, kVerifySeconds);
  }
  if (o.pass) o.detail = seen;
  return o;
}

Outcome toric_ideal() {
  Outcome o;
  const auto a = toric_cli({"--json", "toric-ideal", "[[2,1,0],[0,1,2]]"});
  const auto b = toric_cli({"--json", "toric-ideal", "[[1,1]]"});
  check(o, a.code == cli::ok && b.code == cli::ok, "toric-ideal failed");
  if (!o.pass) return o;
  const auto ja = io::parse_json(a.out)["binomials"], jb = io::parse_json(b.out)["binomials"];
  check(o, ja == io::parse_json("[\"t1*t3 - t2^2\"]"), "[[2,1,0],[0,1,2]] -> " + ja.dump());
  check(o, jb == io::parse_json("[\"t1 - t2\"]"), "[[1,1]] -> " + jb.dump());
  if (o.pass) o.detail = ja.dump() + " " + jb.dump();
  return o;
}

Outcome cone_isomorphism_check() {
  Outcome o;
  const auto yes = toric_cli({"--json", "cone-iso", fixture("cones/orthant2.json"), fixture("cones/sheared.json")});
  const auto no = toric_cli({"--json", "cone-iso", fixture("cones/orthant2.json"), fixture("cones/a1.json")});
  check(o, yes.code == cli::ok && no.code == cli::ok, "cone-iso failed");
  if (!o.pass) return o;
  const auto jy = io::parse_json(yes.out), jn = io::parse_json(no.out);
  check(o, jy["isomorphic"].get<bool>(), "orthant vs sheared not isomorphic");
  check(o, !jn["isomorphic"].get<bool>() && jn["witness"].is_null(), "orthant vs A1 reported isomorphic");
  if (!o.pass) return o;
  const IntegerMatrix w = io::matrix_from_json(jy["witness"]);
  const Cone a(2, {{1, 0}, {0, 1}}), b(2, {{1, 0}, {1, 1}});
  check(o, is_unimodular(w), "witness not unimodular");
  std::vector<LatticeVector> image;
  for (const auto& r : a.extreme_rays()) image.push_back(w * r);
  check(o, Cone(2, image).same_set(b), "witness does not map the cone onto its partner");
  if (o.pass) o.detail = "witness " + jy["witness"].dump() + "; A1 cone absent";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"second application end-to-end", second_application},
      {"first application structural match", first_application},
      {"second application Hilbert basis", second_application_hilbert},
      {"Hilbert basis oracle equivalence", hilbert_oracle},
      {"duality involution", duality_involution},
      {"Minkowski product law", minkowski_product},
      {"Jacobian formula", jacobian_formula},
      {"regular models", regular_models},
      {"half-dimension bound", half_dimension},
      {"third application bound", third_application},
      {"numeric oracle agreement", numeric_agreement},
      {"toric-ideal kernel", toric_ideal},
      {"cone isomorphism", cone_isomorphism_check},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
