#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "toric/resolution.hpp"

namespace toric {

/// 50 significant decimal digits.
using Decimal = boost::multiprecision::cpp_dec_float_50;

struct PoleCandidate {
  Rational lambda;  // (h_i + 1) / prefactor_i
  std::size_t variable = 0;
  std::string name;
};

struct PoleSpectrum {
  std::vector<PoleCandidate> candidates;
  /// Empty when the prefactor is trivial: H is a unit on the chart.
  std::optional<Rational> lambda;
  std::size_t multiplicity = 0;
  /// Value of the cofactor at the chart origin; it only shifts the constant term.
  Rational unit_at_origin;
};

/// Throws DomainError when the chart is not normal crossing, a prefactor
/// exponent is odd or negative, or a candidate is not positive.
PoleSpectrum chart_poles(const ChartState& state);

struct RlctReport {
  Rational lambda1;
  std::size_t m1 = 0;
  std::vector<PoleSpectrum> charts;
  std::string provenance;
};

/// lambda1 = min over charts, m1 = largest multiplicity among the charts
/// attaining it. Throws DomainError when empty or when no chart is singular.
RlctReport aggregate(const std::vector<PoleSpectrum>& spectra, std::string provenance = {});

/// K(n) = lambda1/n + (m1 - 1)/(n ln n). Throws DomainError for n < 2.
Decimal learning_curve(const RlctReport& report, const Decimal& n);
/// lambda1 ln n - (m1 - 1) ln ln n, the constant-free shape of the
/// stochastic complexity bound. Throws DomainError for n < 3.
Decimal stochastic_complexity_bound(const RlctReport& report, const Decimal& n);

/// lambda1 <= d/2
bool half_dim_bound_check(const RlctReport& report, std::size_t d);

std::string to_string(const Decimal& x, int digits = 20);

}  // namespace toric
