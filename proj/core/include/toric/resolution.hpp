#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// x_j -> prod_i u_i^{matrix(i,j)}; rows are the new variables.
struct MonomialStep {
  IntegerMatrix matrix;
  std::vector<std::string> new_vars;
};

/// var -> new_var + offset. An empty new_var keeps the old name.
struct TranslateStep {
  std::string var;
  Rational offset;
  std::string new_var;
};

using ResolutionStep = std::variant<MonomialStep, TranslateStep>;

std::string describe(const ResolutionStep& step);

struct MonomialFactor {
  LatticeVector exponents;   // coordinatewise minimum over the support
  LaurentPolynomial cofactor;
};

/// Throws DomainError for the zero polynomial.
MonomialFactor extract_monomial_factor(const LaurentPolynomial& f);

struct ChartSnapshot {
  std::string step;
  LaurentPolynomial expression;  // H composed with the steps so far, expanded
  LatticeVector prefactor;
  LatticeVector jacobian;
  LaurentPolynomial unit;
  LaurentPolynomial residual;
};

/// One chart of a resolution. The original H composed with the steps equals
/// u^prefactor * unit * residual exactly, and u^jacobian is the cumulative
/// Jacobian monomial up to sign and unit factors.
struct ChartState {
  LaurentPolynomial residual;
  LatticeVector prefactor;
  LatticeVector jacobian;
  LaurentPolynomial unit;
  std::vector<ResolutionStep> steps;
  std::vector<std::string> notes;
  std::vector<ChartSnapshot> history;

  static ChartState initial(const LaurentPolynomial& h);

  const std::vector<std::string>& variables() const { return residual.variables(); }
  /// unit * residual
  LaurentPolynomial cofactor() const;
  /// u^prefactor as a polynomial
  LaurentPolynomial prefactor_monomial() const;
  /// u^prefactor * unit * residual, expanded
  LaurentPolynomial expression() const;
};

struct NormalCrossingReport {
  bool normal_crossing = false;
  std::string reason;
  /// Sample points in [-1,1]^d where the cofactor vanishes or changes sign.
  std::vector<std::vector<double>> zero_candidates;
};

NormalCrossingReport is_normal_crossing(const ChartState& state);

/// Throws DomainError on a non-unimodular or mis-shaped matrix, an unknown
/// variable, or a translation that needs a chart decomposition.
ChartState apply_step(const ChartState& state, const ResolutionStep& step);

struct ResolutionTrace {
  std::vector<ChartState> charts;
  bool complete = false;
  std::vector<std::string> warnings;
};

/// One chart per script. H must be a nonzero polynomial.
ResolutionTrace resolve(const LaurentPolynomial& h, const std::vector<std::vector<ResolutionStep>>& scripts);
ResolutionTrace resolve(const LaurentPolynomial& h, const std::vector<ResolutionStep>& script);

struct MapSuggestion {
  IntegerMatrix matrix;
  bool normal_crossing = false;
  std::optional<Rational> chart_lambda;
  std::size_t multiplicity = 0;
  std::size_t candidates_examined = 0;
};

/// Bounded search over unimodular matrices whose columns come from the
/// support cone (primitive support vectors, its Hilbert basis, unit vectors,
/// and pairwise sums). Returns the identity when H is already a monomial
/// times a unit.
std::optional<MapSuggestion> suggest_map_detailed(const LaurentPolynomial& h);
std::optional<IntegerMatrix> suggest_map(const LaurentPolynomial& h);

struct RegularityReport {
  std::vector<LatticeVector> support_rays;
  bool pointed = false;
  bool simplicial = false;
  bool lower_dimensional = false;
  Integer index = 0;
  bool regular = false;
  std::string message;
};

/// Regularity of the support cone of H: simplicial and unimodular means the
/// monomial parametrization is nonsingular.
RegularityReport support_regularity_check(const LaurentPolynomial& h);

}  // namespace toric
