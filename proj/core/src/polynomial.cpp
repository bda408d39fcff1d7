#include "toric/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace toric {

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables, const Terms& terms)
    : variables_(std::move(variables)) {
  for (const auto& [a, c] : terms) add_term(a, c);
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> variables,
                                              const Rational& c) {
  LaurentPolynomial f(std::move(variables));
  f.add_term(LatticeVector(f.num_variables()), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> variables,
                                              const LatticeVector& exponents, const Rational& c) {
  LaurentPolynomial f(std::move(variables));
  f.add_term(exponents, c);
  return f;
}

LaurentPolynomial LaurentPolynomial::variable(std::vector<std::string> variables,
                                              std::string_view name) {
  LaurentPolynomial f(std::move(variables));
  const auto i = f.variable_index(name);
  if (!i) throw DomainError("unknown variable '" + std::string(name) + "'");
  f.add_term(LatticeVector::unit(f.num_variables(), *i), 1);
  return f;
}

std::optional<std::size_t> LaurentPolynomial::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [a, c] : terms_)
    for (const auto& e : a)
      if (e < 0) return false;
  return true;
}

Rational LaurentPolynomial::coefficient(const LatticeVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::constant_term() const {
  return coefficient(LatticeVector(num_variables()));
}

LaurentPolynomial LaurentPolynomial::with_variables(const std::vector<std::string>& order) const {
  if (order == variables_) return *this;
  std::vector<std::size_t> target(variables_.size());
  std::vector<bool> occurs(variables_.size(), false);
  for (const auto& [a, c] : terms_)
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) occurs[i] = true;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(order.begin(), order.end(), variables_[i]);
    if (it == order.end()) {
      if (occurs[i]) throw DomainError("variable '" + variables_[i] + "' missing from target order");
      target[i] = order.size();
    } else {
      target[i] = static_cast<std::size_t>(it - order.begin());
    }
  }
  LaurentPolynomial out(order);
  for (const auto& [a, c] : terms_) {
    LatticeVector b(order.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (target[i] < order.size()) b[target[i]] = a[i];
    out.add_term(b, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::renamed(std::vector<std::string> names) const {
  if (names.size() != variables_.size()) throw DomainError("rename: wrong number of names");
  LaurentPolynomial out = *this;
  out.variables_ = std::move(names);
  return out;
}

void LaurentPolynomial::add_term(const LatticeVector& exponents, const Rational& c) {
  if (exponents.size() != variables_.size())
    throw DomainError("exponent vector " + to_string(exponents) + " does not match " +
                      std::to_string(variables_.size()) + " variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& g) {
  if (g.variables_ != variables_) return *this = *this + g;
  for (const auto& [a, c] : g.terms_) add_term(a, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& g) {
  if (g.variables_ != variables_) return *this = *this - g;
  for (const auto& [a, c] : g.terms_) add_term(a, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& g) {
  return *this = *this * g;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, coef] : terms_) coef *= c;
  return *this;
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != variables_.size()) throw DomainError("evaluate: wrong number of values");
  Rational sum = 0;
  for (const auto& [a, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (point[i] == 0 && a[i] < 0)
        throw DomainError("evaluate: negative power of " + variables_[i] + " at 0");
      const Rational base = a[i] > 0 ? point[i] : Rational(1) / point[i];
      const auto e = abs(a[i]).convert_to<unsigned>();
      t *= Rational(boost::multiprecision::pow(numerator(base), e),
                    boost::multiprecision::pow(denominator(base), e));
    }
    sum += t;
  }
  return sum;
}

double LaurentPolynomial::evaluate(const std::vector<double>& point) const {
  if (point.size() != variables_.size()) throw DomainError("evaluate: wrong number of values");
  double sum = 0;
  for (const auto& [a, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) t *= std::pow(point[i], a[i].convert_to<int>());
    sum += t;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t variable) const {
  if (variable >= variables_.size()) throw DomainError("derivative: variable out of range");
  LaurentPolynomial out(variables_);
  for (const auto& [a, c] : terms_) {
    if (a[variable] == 0) continue;
    LatticeVector b = a;
    b[variable] -= 1;
    out.add_term(b, c * Rational(a[variable]));
  }
  return out;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  const auto vars = merge_variables(f.variables(), g.variables());
  LaurentPolynomial out = f.with_variables(vars);
  const LaurentPolynomial ga = g.with_variables(vars);
  for (const auto& [a, c] : ga.terms()) out.add_term(a, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return f + (-g);
}

LaurentPolynomial operator-(const LaurentPolynomial& f) {
  LaurentPolynomial out = f;
  return out *= Rational(-1);
}

LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  const auto vars = merge_variables(f.variables(), g.variables());
  const LaurentPolynomial fa = f.with_variables(vars);
  const LaurentPolynomial ga = g.with_variables(vars);
  LaurentPolynomial out(vars);
  for (const auto& [a, c] : fa.terms())
    for (const auto& [b, d] : ga.terms()) out.add_term(a + b, c * d);
  return out;
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& f) {
  LaurentPolynomial out = f;
  return out *= c;
}

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned e) {
  LaurentPolynomial result = LaurentPolynomial::constant(f.variables(), 1);
  LaurentPolynomial base = f;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

bool equal_aligned(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  const auto vars = merge_variables(f.variables(), g.variables());
  return f.with_variables(vars).terms() == g.with_variables(vars).terms();
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [a, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    std::string factors;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += f.variables()[i];
      if (a[i] != 1) factors += "^" + a[i].str();
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

std::vector<LatticeVector> support(const LaurentPolynomial& f) {
  std::vector<LatticeVector> out;
  for (const auto& [a, c] : f.terms()) out.push_back(a);
  return out;
}

std::vector<LatticeVector> convex_hull_vertices(const std::vector<LatticeVector>& points) {
  if (points.empty()) return {};
  const std::size_t n = points.front().size();
  std::vector<LatticeVector> lifted;
  for (const auto& p : points) {
    if (p.size() != n) throw DomainError("convex hull: mixed dimensions");
    std::vector<Integer> e = p.entries();
    e.push_back(1);
    lifted.emplace_back(std::move(e));
  }
  const Cone c(n + 1, lifted);
  std::vector<LatticeVector> out;
  for (const auto& r : c.extreme_rays()) {
    // Lifted points are primitive, so each extreme ray is one of them exactly.
    std::vector<Integer> e(r.begin(), r.end() - 1);
    out.emplace_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("newton_polytope: zero polynomial");
  const std::size_t n = f.num_variables();
  if (n == 0) throw DomainError("newton_polytope: polynomial has no variables");
  const auto supp = support(f);
  std::vector<LatticeVector> rays;
  for (const auto& a : supp)
    if (!a.is_zero()) rays.push_back(a);
  return {convex_hull_vertices(supp), Cone(n, rays)};
}

LaurentPolynomial initial_form(const LaurentPolynomial& f, const std::vector<Rational>& w) {
  if (f.is_zero()) throw DomainError("initial_form: zero polynomial");
  if (w.size() != f.num_variables()) throw DomainError("initial_form: weight has wrong length");
  auto weight = [&](const LatticeVector& a) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * Rational(a[i]);
    return s;
  };
  Rational best = weight(f.terms().begin()->first);
  for (const auto& [a, c] : f.terms()) best = std::max(best, weight(a));
  LaurentPolynomial out(f.variables());
  for (const auto& [a, c] : f.terms())
    if (weight(a) == best) out.add_term(a, c);
  return out;
}

LaurentPolynomial substitute_monomial(const LaurentPolynomial& f, const IntegerMatrix& map_matrix,
                                      const std::vector<std::string>& new_vars) {
  if (map_matrix.cols() != f.num_variables())
    throw DomainError("substitute_monomial: matrix has " + std::to_string(map_matrix.cols()) +
                      " columns for " + std::to_string(f.num_variables()) + " variables");
  if (map_matrix.rows() != new_vars.size())
    throw DomainError("substitute_monomial: matrix has " + std::to_string(map_matrix.rows()) +
                      " rows for " + std::to_string(new_vars.size()) + " new variables");
  LaurentPolynomial out(new_vars);
  for (const auto& [a, c] : f.terms()) out.add_term(map_matrix * a, c);
  return out;
}

LaurentPolynomial translate(const LaurentPolynomial& f, std::size_t var, const std::string& new_name,
                            const Rational& offset) {
  if (var >= f.num_variables()) throw DomainError("translate: variable out of range");
  std::vector<std::string> vars = f.variables();
  vars[var] = new_name;
  LaurentPolynomial out(vars);
  for (const auto& [a, c] : f.terms()) {
    if (a[var] < 0)
      throw DomainError("translate: " + f.variables()[var] + " occurs with a negative exponent");
    const unsigned e = a[var].convert_to<unsigned>();
    // (y + offset)^e expanded binomially
    Integer binom = 1;
    Rational off_pow = 1;
    std::vector<Rational> off_powers(e + 1);
    for (unsigned k = 0; k <= e; ++k) {
      off_powers[k] = off_pow;
      off_pow *= offset;
    }
    for (unsigned k = 0; k <= e; ++k) {
      LatticeVector b = a;
      b[var] = e - k;
      out.add_term(b, c * Rational(binom) * off_powers[k]);
      binom = binom * (e - k) / (k + 1);
    }
  }
  return out;
}

ToricIdealBasis toric_ideal_basis(const IntegerMatrix& exponent_matrix) {
  ToricIdealBasis out;
  out.kernel = integer_kernel(exponent_matrix);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < exponent_matrix.cols(); ++i) vars.push_back("t" + std::to_string(i + 1));
  for (const auto& l : out.kernel) {
    LatticeVector plus(l.size()), minus(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] > 0) plus[i] = l[i];
      if (l[i] < 0) minus[i] = -l[i];
    }
    LaurentPolynomial b(vars);
    b.add_term(plus, 1);
    b.add_term(minus, -1);
    out.binomials.push_back(std::move(b));
  }
  return out;
}

}  // namespace toric
