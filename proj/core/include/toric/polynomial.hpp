#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Sum of c_a x^a with exact rational c_a and integer (possibly negative)
/// exponent vectors a. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<LatticeVector, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::vector<std::string> variables);
  LaurentPolynomial(std::vector<std::string> variables, const Terms& terms);

  static LaurentPolynomial constant(std::vector<std::string> variables, const Rational& c);
  static LaurentPolynomial monomial(std::vector<std::string> variables, const LatticeVector& exponents,
                                    const Rational& c = 1);
  static LaurentPolynomial variable(std::vector<std::string> variables, std::string_view name);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Every exponent nonnegative.
  bool is_polynomial() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Rational coefficient(const LatticeVector& exponents) const;
  Rational constant_term() const;

  /// Re-express over another variable list (reordered and/or extended).
  /// Throws DomainError if a variable that occurs is missing from `order`.
  LaurentPolynomial with_variables(const std::vector<std::string>& order) const;
  /// Same terms, variables renamed position by position.
  LaurentPolynomial renamed(std::vector<std::string> names) const;

  void add_term(const LatticeVector& exponents, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& g);
  LaurentPolynomial& operator-=(const LaurentPolynomial& g);
  LaurentPolynomial& operator*=(const LaurentPolynomial& g);
  LaurentPolynomial& operator*=(const Rational& c);

  /// Throws DomainError when a variable with a negative exponent is set to 0.
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  LaurentPolynomial derivative(std::size_t variable) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

 private:
  std::vector<std::string> variables_;
  Terms terms_;
};

/// Union of the variable lists, first list's order then new names of the second.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator-(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator-(const LaurentPolynomial& f);
LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& f);
LaurentPolynomial pow(const LaurentPolynomial& f, unsigned e);
/// Exact match including variable order after alignment by name.
bool equal_aligned(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Canonical text: terms in descending lexicographic exponent order,
/// coefficients "p/q", '*' between factors, "^e" for e != 1, "0" for zero.
std::string to_string(const LaurentPolynomial& f);

/// poly := ['-'] term (('+'|'-') term)*
/// term := coeff | coeff '*' factors | factors
/// factors := factor ('*' factor)*;  factor := ident ('^' ['-'] int)?
/// coeff := int ('/' posint)?;  ident := letter (letter|digit|'_')*
/// With `variable_order` the variables are exactly that list (unknown names
/// are an error); otherwise they are taken in order of first appearance.
LaurentPolynomial parse_polynomial(std::string_view text,
                                   const std::optional<std::vector<std::string>>& variable_order = {});

std::vector<LatticeVector> support(const LaurentPolynomial& f);

struct NewtonPolytope {
  std::vector<LatticeVector> vertices;  // sorted
  Cone support_cone;
};

/// Throws DomainError for the zero polynomial or one without variables.
NewtonPolytope newton_polytope(const LaurentPolynomial& f);

/// Vertices of conv(points), sorted. Points must share a dimension >= 1.
std::vector<LatticeVector> convex_hull_vertices(const std::vector<LatticeVector>& points);

/// Terms maximizing <w, a>. Throws DomainError for the zero polynomial.
LaurentPolynomial initial_form(const LaurentPolynomial& f, const std::vector<Rational>& w);

/// x_j -> prod_i u_i^{A(i,j)}: every term c x^a becomes c u^{A a}.
LaurentPolynomial substitute_monomial(const LaurentPolynomial& f, const IntegerMatrix& map_matrix,
                                      const std::vector<std::string>& new_vars);

/// x_var -> new_name + offset (the variable keeps its position). Throws
/// DomainError when x_var occurs with a negative exponent.
LaurentPolynomial translate(const LaurentPolynomial& f, std::size_t var, const std::string& new_name,
                            const Rational& offset);

struct ToricIdealBasis {
  std::vector<LatticeVector> kernel;          // HNF basis of ker A
  std::vector<LaurentPolynomial> binomials;   // t^{l+} - t^{l-} over t1..tn
  static constexpr const char* label = "lattice-basis generators (not saturated)";
};

ToricIdealBasis toric_ideal_basis(const IntegerMatrix& exponent_matrix);

}  // namespace toric
