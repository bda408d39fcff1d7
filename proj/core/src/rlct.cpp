#include "toric/rlct.hpp"

#include <sstream>

namespace toric {

PoleSpectrum chart_poles(const ChartState& state) {
  const NormalCrossingReport nc = is_normal_crossing(state);
  if (!nc.normal_crossing)
    throw DomainError("chart_poles: chart is not normal crossing (" + nc.reason + ")");
  PoleSpectrum s;
  s.unit_at_origin = state.cofactor().constant_term();
  for (std::size_t i = 0; i < state.prefactor.size(); ++i) {
    const Integer& k = state.prefactor[i];
    const std::string& name = state.variables()[i];
    if (k == 0) continue;
    if (k % 2 != 0)
      throw DomainError("chart_poles: odd prefactor exponent " + k.str() + " on " + name +
                        ": H not locally a square times unit - check resolution");
    const Integer num = state.jacobian[i] + 1;
    if (num <= 0)
      throw DomainError("chart_poles: Jacobian exponent " + state.jacobian[i].str() + " on " +
                        name + " gives a non-positive pole candidate");
    s.candidates.push_back({Rational(num, k), i, name});
  }
  for (const auto& c : s.candidates) {
    if (!s.lambda || c.lambda < *s.lambda) {
      s.lambda = c.lambda;
      s.multiplicity = 1;
    } else if (c.lambda == *s.lambda) {
      ++s.multiplicity;
    }
  }
  return s;
}

RlctReport aggregate(const std::vector<PoleSpectrum>& spectra, std::string provenance) {
  if (spectra.empty()) throw DomainError("aggregate: no charts");
  RlctReport r;
  r.charts = spectra;
  r.provenance = std::move(provenance);
  bool any = false;
  for (const auto& s : spectra) {
    if (!s.lambda) continue;
    if (!any || *s.lambda < r.lambda1) {
      r.lambda1 = *s.lambda;
      r.m1 = s.multiplicity;
      any = true;
    } else if (*s.lambda == r.lambda1) {
      r.m1 = std::max(r.m1, s.multiplicity);
    }
  }
  if (!any) throw DomainError("aggregate: no singularity on any chart (H is a unit)");
  return r;
}

namespace {

Decimal to_decimal(const Rational& q) {
  return Decimal(numerator(q).str()) / Decimal(denominator(q).str());
}

}  // namespace

Decimal learning_curve(const RlctReport& report, const Decimal& n) {
  if (n < 2) throw DomainError("learning_curve: n must be at least 2");
  const Decimal lam = to_decimal(report.lambda1);
  const Decimal m_minus_1 = Decimal(static_cast<long long>(report.m1) - 1);
  return lam / n + m_minus_1 / (n * log(n));
}

Decimal stochastic_complexity_bound(const RlctReport& report, const Decimal& n) {
  if (n < 3) throw DomainError("stochastic_complexity_bound: n must be at least 3");
  const Decimal lam = to_decimal(report.lambda1);
  const Decimal m_minus_1 = Decimal(static_cast<long long>(report.m1) - 1);
  return lam * log(n) - m_minus_1 * log(log(n));
}

bool half_dim_bound_check(const RlctReport& report, std::size_t d) {
  return report.lambda1 <= Rational(static_cast<long long>(d), 2);
}

std::string to_string(const Decimal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace toric
