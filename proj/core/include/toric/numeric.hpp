#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

enum class QuadratureMethod { grid, monte_carlo };

/// Z(n) = (1/vol) * integral over the box of exp(-n H).
struct QuadratureSpec {
  std::vector<std::pair<Rational, Rational>> box;  // per variable [lo, hi], lo >= 0
  std::size_t points_per_axis = 256;
  double refine = 1.5;  // ratio between consecutive panel widths, finest at lo
  std::vector<double> n_values{1e2, 1e3, 1e4, 1e5, 1e6};
  int digits = 30;  // output digits only; arithmetic is double precision
  QuadratureMethod method = QuadratureMethod::grid;
  std::uint64_t seed = 20240601;
  std::size_t samples = 1000000;

  /// Unit box [0,1]^d with the defaults above.
  static QuadratureSpec unit_box(std::size_t d);
};

/// Throws DomainError when the spec violates its invariants for dimension d.
void validate(const QuadratureSpec& spec, std::size_t d);

struct FreeEnergySample {
  double n = 0;
  double free_energy = 0;  // -ln Z(n)
};

/// Composite 8-point Gauss-Legendre on geometrically graded panels per axis
/// (or seeded Monte Carlo). Throws DomainError for more than 3 variables or
/// when H is negative at a quadrature node.
std::vector<FreeEnergySample> estimate_free_energy(const LaurentPolynomial& h,
                                                   const QuadratureSpec& spec);

struct LambdaFit {
  double lambda_hat = 0;
  double m_minus_1 = 0;
  double intercept = 0;
  double residual_rms = 0;
  bool used_log_log = true;
};

/// Least squares F(n) ~ lambda ln n - (m-1) ln ln n + c. The ln ln n column
/// is dropped when some n < 3. Throws DomainError with fewer than 4 points,
/// fewer than 3 decades of spread, or a rank-deficient design.
LambdaFit fit_lambda(const std::vector<FreeEnergySample>& points);

/// |F(n_max) at twice the grid density - F(n_max) at the given density|.
double step_halving_change(const LaurentPolynomial& h, const QuadratureSpec& spec);

}  // namespace toric
