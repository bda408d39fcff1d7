#include "toric/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toric/hilbert.hpp"

namespace toric {

std::string describe(const ResolutionStep& step) {
  if (const auto* m = std::get_if<MonomialStep>(&step)) {
    std::string vars;
    for (const auto& v : m->new_vars) vars += (vars.empty() ? "" : ",") + v;
    return "monomial " + to_string(m->matrix) + " -> (" + vars + ")";
  }
  const auto& t = std::get<TranslateStep>(step);
  const std::string target = t.new_var.empty() ? t.var : t.new_var;
  return "translate " + t.var + " = " + target + (t.offset < 0 ? " - " : " + ") +
         to_string(t.offset < 0 ? Rational(-t.offset) : t.offset);
}

MonomialFactor extract_monomial_factor(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("extract_monomial_factor: zero polynomial");
  LatticeVector m = f.terms().begin()->first;
  for (const auto& [a, c] : f.terms())
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(m[i], a[i]);
  LaurentPolynomial cof(f.variables());
  for (const auto& [a, c] : f.terms()) cof.add_term(a - m, c);
  return {std::move(m), std::move(cof)};
}

LaurentPolynomial ChartState::cofactor() const { return unit * residual; }

LaurentPolynomial ChartState::prefactor_monomial() const {
  return LaurentPolynomial::monomial(variables(), prefactor);
}

LaurentPolynomial ChartState::expression() const { return prefactor_monomial() * cofactor(); }

namespace {

ChartSnapshot snapshot(const ChartState& s, std::string step) {
  return {std::move(step), s.expression(), s.prefactor, s.jacobian, s.unit, s.residual};
}

// Largest odd m with m^d <= budget, at least 3.
std::size_t grid_points(std::size_t d, std::size_t budget, std::size_t cap) {
  std::size_t m = 3;
  for (;;) {
    const std::size_t next = m + 2;
    if (next > cap) break;
    double total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<double>(next);
    if (total > static_cast<double>(budget)) break;
    m = next;
  }
  return m;
}

// Visit every point of the uniform grid with m points per axis on [lo,hi]^d.
template <class Fn>
void for_each_grid_point(std::size_t d, std::size_t m, double lo, double hi, Fn&& fn) {
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> x(d);
  for (;;) {
    for (std::size_t i = 0; i < d; ++i)
      x[i] = lo + (hi - lo) * static_cast<double>(idx[i]) / static_cast<double>(m - 1);
    fn(idx, x);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++idx[i] < m) break;
      idx[i] = 0;
    }
    if (i == d) return;
  }
}

double coefficient_scale(const LaurentPolynomial& f) {
  double s = 0;
  for (const auto& [a, c] : f.terms()) s += std::fabs(to_double(c));
  return s;
}

bool fast_normal_crossing(const ChartState& s) {
  for (const auto& k : s.prefactor)
    if (k < 0) return false;
  const LaurentPolynomial cof = s.cofactor();
  return cof.is_polynomial() && cof.constant_term() != 0;
}

}  // namespace

ChartState ChartState::initial(const LaurentPolynomial& h) {
  auto [m, cof] = extract_monomial_factor(h);
  ChartState s;
  s.residual = std::move(cof);
  s.prefactor = std::move(m);
  s.jacobian = LatticeVector(h.num_variables());
  s.unit = LaurentPolynomial::constant(h.variables(), 1);
  s.history.push_back(snapshot(s, "initial"));
  return s;
}

NormalCrossingReport is_normal_crossing(const ChartState& state) {
  NormalCrossingReport r;
  const LaurentPolynomial cof = state.cofactor();
  r.normal_crossing = true;
  for (std::size_t i = 0; i < state.prefactor.size(); ++i) {
    if (state.prefactor[i] < 0) {
      r.normal_crossing = false;
      r.reason = "prefactor exponent of " + state.variables()[i] + " is negative";
      break;
    }
  }
  if (r.normal_crossing && !cof.is_polynomial()) {
    r.normal_crossing = false;
    r.reason = "cofactor has negative exponents";
  }
  if (r.normal_crossing && cof.constant_term() == 0) {
    r.normal_crossing = false;
    r.reason = "cofactor vanishes at the origin";
  }

  const std::size_t d = cof.num_variables();
  if (d == 0 || !cof.is_polynomial()) return r;
  const std::size_t m = grid_points(d, 20000, 101);
  const double tol = 1e-12 * std::max(1.0, coefficient_scale(cof));
  std::vector<double> values;
  std::vector<std::vector<double>> points;
  for_each_grid_point(d, m, -1.0, 1.0, [&](const auto&, const std::vector<double>& x) {
    values.push_back(cof.evaluate(x));
    points.push_back(x);
  });
  constexpr std::size_t kMaxReported = 16;
  for (std::size_t p = 0; p < values.size() && r.zero_candidates.size() < kMaxReported; ++p) {
    bool flag = std::fabs(values[p]) <= tol;
    // Sign change towards the next grid point along any axis.
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < d && !flag; ++axis, stride *= m) {
      const std::size_t coord = (p / stride) % m;
      if (coord + 1 < m && values[p] * values[p + stride] < 0 &&
          std::fabs(values[p]) <= std::fabs(values[p + stride]))
        flag = true;
    }
    if (flag) r.zero_candidates.push_back(points[p]);
  }
  return r;
}

ChartState apply_step(const ChartState& state, const ResolutionStep& step) {
  ChartState next = state;
  next.steps.push_back(step);
  const std::size_t d = state.variables().size();

  if (const auto* ms = std::get_if<MonomialStep>(&step)) {
    const IntegerMatrix& a = ms->matrix;
    if (!a.is_square() || a.cols() != d)
      throw DomainError("monomial step: matrix must be " + std::to_string(d) + "x" +
                        std::to_string(d) + ", got " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()));
    if (ms->new_vars.size() != d)
      throw DomainError("monomial step: expected " + std::to_string(d) + " new variable names");
    if (!is_unimodular(a))
      throw DomainError("monomial step: matrix " + to_string(a) + " is not unimodular (det " +
                        determinant(a).str() + ")");
    const LaurentPolynomial substituted =
        substitute_monomial(state.cofactor(), a, ms->new_vars);
    auto [m, cof] = extract_monomial_factor(substituted);
    next.prefactor = a * state.prefactor + m;
    next.jacobian = a * state.jacobian;
    for (std::size_t i = 0; i < d; ++i) {
      Integer rowsum = 0;
      for (std::size_t j = 0; j < d; ++j) rowsum += a(i, j);
      next.jacobian[i] += rowsum - 1;
    }
    next.residual = std::move(cof);
    next.unit = LaurentPolynomial::constant(ms->new_vars, 1);
  } else {
    const auto& ts = std::get<TranslateStep>(step);
    const auto idx = state.residual.variable_index(ts.var);
    if (!idx) throw DomainError("translate: unknown variable '" + ts.var + "'");
    const std::size_t i = *idx;
    const std::string name = ts.new_var.empty() ? ts.var : ts.new_var;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i && state.variables()[j] == name)
        throw DomainError("translate: name '" + name + "' already in use");
    if (state.prefactor[i] < 0)
      throw DomainError("translate: " + ts.var + " has a negative prefactor exponent; chart decomposition required");
    LaurentPolynomial unit = translate(state.unit, i, name, ts.offset);
    if (state.prefactor[i] > 0) {
      if (ts.offset == 0)
        throw DomainError("translate: zero offset cannot absorb the prefactor of " + ts.var +
                          "; chart decomposition required");
      // (v + c)^k does not vanish at the new origin, so it joins the unit.
      LatticeVector e(d);
      e[i] = state.prefactor[i];
      const LaurentPolynomial power = translate(
          LaurentPolynomial::monomial(state.variables(), e), i, name, ts.offset);
      unit = unit * power;
      next.notes.push_back("prefactor " + ts.var + "^" + state.prefactor[i].str() +
                           " absorbed into the unit");
      next.prefactor[i] = 0;
    }
    if (state.jacobian[i] != 0) {
      if (ts.offset == 0)
        throw DomainError("translate: zero offset with a Jacobian power of " + ts.var +
                          "; chart decomposition required");
      next.notes.push_back("Jacobian factor " + ts.var + "^" + state.jacobian[i].str() +
                           " is a unit after translation and no longer contributes poles");
      next.jacobian[i] = 0;
    }
    const LaurentPolynomial residual = translate(state.residual, i, name, ts.offset);
    if (residual.is_zero()) throw DomainError("translate: residual became zero");
    auto [m, cof] = extract_monomial_factor(residual);
    next.prefactor += m;
    next.residual = std::move(cof);
    next.unit = std::move(unit);
  }
  next.history.push_back(snapshot(next, describe(step)));
  return next;
}

ResolutionTrace resolve(const LaurentPolynomial& h,
                        const std::vector<std::vector<ResolutionStep>>& scripts) {
  if (h.is_zero()) throw DomainError("resolve: H is the zero polynomial");
  if (!h.is_polynomial()) throw DomainError("resolve: H must have nonnegative exponents");
  ResolutionTrace trace;

  const std::size_t d = h.num_variables();
  if (d > 0) {
    const std::size_t m = grid_points(d, 20000, 101);
    const double tol = 1e-12 * std::max(1.0, coefficient_scale(h));
    std::optional<std::vector<double>> where;
    for_each_grid_point(d, m, 0.0, 1.0, [&](const auto&, const std::vector<double>& x) {
      if (!where && h.evaluate(x) < -tol) where = x;
    });
    if (where) {
      std::ostringstream os;
      os << "H is negative at (";
      for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << (*where)[i];
      os << ") on the [0,1]^" << d << " sample grid";
      trace.warnings.push_back(os.str());
    }
  }

  const std::vector<std::vector<ResolutionStep>> effective =
      scripts.empty() ? std::vector<std::vector<ResolutionStep>>{{}} : scripts;
  trace.complete = true;
  for (const auto& script : effective) {
    ChartState s = ChartState::initial(h);
    for (const auto& step : script) s = apply_step(s, step);
    if (!fast_normal_crossing(s)) trace.complete = false;
    trace.charts.push_back(std::move(s));
  }
  return trace;
}

ResolutionTrace resolve(const LaurentPolynomial& h, const std::vector<ResolutionStep>& script) {
  return resolve(h, std::vector<std::vector<ResolutionStep>>{script});
}

namespace {

struct Score {
  bool usable = false;  // normal crossing with even prefactor
  std::optional<Rational> lambda;
  std::size_t multiplicity = 0;
  Integer degree = 0;

  // True when this score is strictly better than `o`.
  bool better_than(const Score& o) const {
    if (usable != o.usable) return usable;
    if (lambda.has_value() != o.lambda.has_value()) return lambda.has_value();
    if (lambda && *lambda != *o.lambda) return *lambda < *o.lambda;
    if (multiplicity != o.multiplicity) return multiplicity > o.multiplicity;
    return degree > o.degree;
  }
};

Score score_chart(const ChartState& s) {
  Score sc;
  bool even = true;
  for (const auto& k : s.prefactor) {
    if (k % 2 != 0) even = false;
    sc.degree += k;
  }
  sc.usable = even && fast_normal_crossing(s);
  if (!sc.usable) return sc;
  for (std::size_t i = 0; i < s.prefactor.size(); ++i) {
    if (s.prefactor[i] <= 0) continue;
    const Rational cand = Rational(s.jacobian[i] + 1, s.prefactor[i]);
    if (!sc.lambda || cand < *sc.lambda) {
      sc.lambda = cand;
      sc.multiplicity = 1;
    } else if (cand == *sc.lambda) {
      ++sc.multiplicity;
    }
  }
  return sc;
}

std::vector<LatticeVector> dedupe(std::vector<LatticeVector> v) {
  std::vector<LatticeVector> out;
  for (auto& x : v)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  return out;
}

}  // namespace

std::optional<MapSuggestion> suggest_map_detailed(const LaurentPolynomial& h) {
  if (h.is_zero()) throw DomainError("suggest_map: zero polynomial");
  const std::size_t d = h.num_variables();
  if (d == 0) return std::nullopt;
  std::vector<std::string> new_vars;
  for (std::size_t i = 0; i < d; ++i) new_vars.push_back("u" + std::to_string(i + 1));

  const ChartState start = ChartState::initial(h);
  const Score identity_score = score_chart(start);
  if (identity_score.usable)
    return MapSuggestion{IntegerMatrix::identity(d), true, identity_score.lambda,
                         identity_score.multiplicity, 1};

  std::vector<LatticeVector> pool;
  std::vector<LatticeVector> support_rays;
  for (const auto& a : support(h))
    if (!a.is_zero()) support_rays.push_back(primitive(a));
  support_rays = dedupe(support_rays);
  pool = support_rays;
  if (!support_rays.empty()) {
    const Cone c(d, support_rays);
    if (is_pointed(c))
      for (const auto& x : hilbert_basis(c).elements) pool.push_back(x);
  }
  for (std::size_t i = 0; i < d; ++i) pool.push_back(LatticeVector::unit(d, i));
  pool = dedupe(pool);

  constexpr std::size_t kMaxCandidates = 50000;
  std::optional<MapSuggestion> best;
  Score best_score;
  std::size_t examined = 0;

  auto search = [&](const std::vector<LatticeVector>& vectors) {
    const std::size_t p = vectors.size();
    if (p < d) return;
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i) comb[i] = i;
    for (;;) {
      std::vector<LatticeVector> cols;
      for (auto i : comb) cols.push_back(vectors[i]);
      if (abs(determinant(IntegerMatrix::from_columns(cols, d))) == 1) {
        std::vector<std::size_t> perm(d);
        for (std::size_t i = 0; i < d; ++i) perm[i] = i;
        do {
          if (examined >= kMaxCandidates) return;
          ++examined;
          std::vector<LatticeVector> ordered;
          for (auto i : perm) ordered.push_back(cols[i]);
          const IntegerMatrix m = IntegerMatrix::from_columns(ordered, d);
          const ChartState s = apply_step(start, MonomialStep{m, new_vars});
          const Score sc = score_chart(s);
          if (!best || sc.better_than(best_score)) {
            best = MapSuggestion{m, sc.usable, sc.lambda, sc.multiplicity, 0};
            best_score = sc;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      // next combination
      std::size_t i = d;
      while (i > 0 && comb[i - 1] == p - d + i - 1) --i;
      if (i == 0) return;
      ++comb[i - 1];
      for (std::size_t j = i; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
  };

  search(pool);
  if (!best || !best->normal_crossing) {
    std::vector<LatticeVector> extended = pool;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) extended.push_back(pool[i] + pool[j]);
    extended = dedupe(extended);
    search(extended);
  }
  if (best) best->candidates_examined = examined;
  return best;
}

std::optional<IntegerMatrix> suggest_map(const LaurentPolynomial& h) {
  auto s = suggest_map_detailed(h);
  if (!s) return std::nullopt;
  return s->matrix;
}

RegularityReport support_regularity_check(const LaurentPolynomial& h) {
  if (h.is_zero()) throw DomainError("regularity check: zero polynomial");
  const std::size_t d = h.num_variables();
  if (d == 0) throw DomainError("regularity check: polynomial has no variables");
  RegularityReport r;
  std::vector<LatticeVector> rays;
  for (const auto& a : support(h))
    if (!a.is_zero()) rays.push_back(a);
  const Cone c(d, rays);
  r.support_rays = c.extreme_rays();
  r.pointed = is_pointed(c);
  r.lower_dimensional = !c.is_full_dimensional();
  r.simplicial = c.is_simplicial();
  if (!r.pointed) {
    r.message = "support cone contains a line; not a regular cone";
    return r;
  }
  r.index = lattice_index(c.extreme_rays(), d);
  r.regular = r.simplicial && r.index == 1;
  if (r.regular) {
    r.message = "support cone is regular: the parametrization is nonsingular";
  } else if (!r.simplicial) {
    r.message = "support cone is not simplicial";
  } else {
    r.message = "support cone is simplicial with lattice index " + r.index.str();
  }
  if (r.lower_dimensional)
    r.message += " (checked on the " + std::to_string(c.dimension()) +
                 "-dimensional span of the support)";
  return r;
}

}  // namespace toric
