#include "toric/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

namespace toric {

QuadratureSpec QuadratureSpec::unit_box(std::size_t d) {
  QuadratureSpec s;
  s.box.assign(d, {Rational(0), Rational(1)});
  return s;
}

void validate(const QuadratureSpec& spec, std::size_t d) {
  if (spec.box.size() != d)
    throw DomainError("quadrature: box has " + std::to_string(spec.box.size()) +
                      " intervals for " + std::to_string(d) + " variables");
  for (const auto& [lo, hi] : spec.box) {
    if (lo < 0) throw DomainError("quadrature: box lower bounds must be >= 0");
    if (!(lo < hi)) throw DomainError("quadrature: empty box interval");
  }
  if (spec.n_values.size() < 4) throw DomainError("quadrature: need at least 4 n values");
  for (std::size_t i = 0; i < spec.n_values.size(); ++i) {
    if (!(spec.n_values[i] > 0)) throw DomainError("quadrature: n values must be positive");
    if (i && !(spec.n_values[i] > spec.n_values[i - 1]))
      throw DomainError("quadrature: n values must be strictly increasing");
  }
  if (spec.points_per_axis < 8) throw DomainError("quadrature: need at least 8 points per axis");
  if (!(spec.refine >= 1)) throw DomainError("quadrature: refine factor must be >= 1");
  if (spec.method == QuadratureMethod::monte_carlo && spec.samples == 0)
    throw DomainError("quadrature: Monte Carlo needs samples");
}

namespace {

constexpr std::size_t kOrder = 8;

struct Axis {
  std::vector<double> x;
  std::vector<double> w;
};

Axis graded_axis(double lo, double hi, std::size_t points, double refine) {
  const std::size_t panels = std::max<std::size_t>(1, (points + kOrder - 1) / kOrder);
  // Panel boundaries shrink geometrically towards lo.
  std::vector<double> bounds{hi};
  for (std::size_t k = 0; k + 1 < panels; ++k) bounds.push_back(lo + (bounds.back() - lo) / refine);
  bounds.push_back(lo);
  std::reverse(bounds.begin(), bounds.end());

  using Rule = boost::math::quadrature::gauss<double, kOrder>;
  std::vector<double> ref_x, ref_w;
  const auto& abscissa = Rule::abscissa();
  const auto& weights = Rule::weights();
  for (std::size_t i = 0; i < abscissa.size(); ++i) {
    ref_x.push_back(-abscissa[i]);
    ref_w.push_back(weights[i]);
    if (abscissa[i] != 0) {
      ref_x.push_back(abscissa[i]);
      ref_w.push_back(weights[i]);
    }
  }
  Axis axis;
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    const double a = bounds[p], b = bounds[p + 1];
    for (std::size_t i = 0; i < ref_x.size(); ++i) {
      axis.x.push_back(0.5 * (b - a) * ref_x[i] + 0.5 * (a + b));
      axis.w.push_back(0.5 * (b - a) * ref_w[i]);
    }
  }
  return axis;
}

// Compensated (Neumaier) running sum; order of additions is fixed by the caller.
struct Accumulator {
  double sum = 0;
  double c = 0;
  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      c += (sum - t) + v;
    } else {
      c += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + c; }
};

// H flattened to doubles for fast repeated evaluation.
struct CompiledPolynomial {
  std::vector<double> coef;
  std::vector<std::vector<int>> exps;
  double scale = 0;

  explicit CompiledPolynomial(const LaurentPolynomial& h) {
    for (const auto& [a, c] : h.terms()) {
      coef.push_back(to_double(c));
      std::vector<int> e;
      for (const auto& x : a) e.push_back(x.convert_to<int>());
      exps.push_back(std::move(e));
      scale += std::fabs(coef.back());
    }
  }

  double operator()(const std::vector<double>& x) const {
    double s = 0;
    for (std::size_t t = 0; t < coef.size(); ++t) {
      double v = coef[t];
      for (std::size_t i = 0; i < x.size(); ++i) {
        const int e = exps[t][i];
        if (e == 0) continue;
        double p = 1;
        const double base = e > 0 ? x[i] : 1.0 / x[i];
        for (int k = 0; k < std::abs(e); ++k) p *= base;
        v *= p;
      }
      s += v;
    }
    return s;
  }
};

[[noreturn]] void negative_sample(const LaurentPolynomial& h, const std::vector<double>& x,
                                  double value) {
  std::ostringstream os;
  os.precision(17);
  os << "H is negative (" << value << ") at (";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << h.variables()[i] << "=" << x[i];
  os << ")";
  throw DomainError(os.str());
}

}  // namespace

std::vector<FreeEnergySample> estimate_free_energy(const LaurentPolynomial& h,
                                                   const QuadratureSpec& spec) {
  const std::size_t d = h.num_variables();
  if (d > 3) throw DomainError("estimate_free_energy: more than 3 variables, accuracy not guaranteed");
  validate(spec, d);
  const CompiledPolynomial poly(h);
  const double tol = 1e-12 * std::max(1.0, poly.scale);
  const std::size_t nn = spec.n_values.size();
  std::vector<Accumulator> acc(nn);
  double volume = 1;
  for (const auto& [lo, hi] : spec.box) volume *= to_double(hi - lo);

  auto visit = [&](const std::vector<double>& x, double weight) {
    const double value = poly(x);
    if (value < -tol) negative_sample(h, x, value);
    const double v = std::max(value, 0.0);
    for (std::size_t k = 0; k < nn; ++k) acc[k].add(weight * std::exp(-spec.n_values[k] * v));
  };

  if (spec.method == QuadratureMethod::grid) {
    std::vector<Axis> axes;
    for (const auto& [lo, hi] : spec.box)
      axes.push_back(graded_axis(to_double(lo), to_double(hi), spec.points_per_axis, spec.refine));
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> x(d);
    for (;;) {
      double w = 1;
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = axes[i].x[idx[i]];
        w *= axes[i].w[idx[i]];
      }
      visit(x, w / volume);
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (++idx[i] < axes[i].x.size()) break;
        idx[i] = 0;
      }
      if (i == d) break;
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    std::vector<std::uniform_real_distribution<double>> dists;
    for (const auto& [lo, hi] : spec.box) dists.emplace_back(to_double(lo), to_double(hi));
    std::vector<double> x(d);
    const double w = 1.0 / static_cast<double>(spec.samples);
    for (std::size_t s = 0; s < spec.samples; ++s) {
      for (std::size_t i = 0; i < d; ++i) x[i] = dists[i](rng);
      visit(x, w);
    }
  }

  std::vector<FreeEnergySample> out;
  for (std::size_t k = 0; k < nn; ++k) out.push_back({spec.n_values[k], -std::log(acc[k].value())});
  return out;
}

LambdaFit fit_lambda(const std::vector<FreeEnergySample>& points) {
  if (points.size() < 4) throw DomainError("fit_lambda: need at least 4 points");
  double lo = points.front().n, hi = points.front().n;
  for (const auto& p : points) {
    if (!(p.n > 1)) throw DomainError("fit_lambda: n values must exceed 1");
    lo = std::min(lo, p.n);
    hi = std::max(hi, p.n);
  }
  if (hi / lo < 1e3) throw DomainError("fit_lambda: n values span less than 3 decades (ill-conditioned)");

  LambdaFit fit;
  fit.used_log_log = lo >= 3;
  const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
  const Eigen::Index cols = fit.used_log_log ? 3 : 2;
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double ln = std::log(points[static_cast<std::size_t>(r)].n);
    a(r, 0) = ln;
    if (fit.used_log_log) {
      a(r, 1) = -std::log(ln);
      a(r, 2) = 1;
    } else {
      a(r, 1) = 1;
    }
    b(r) = points[static_cast<std::size_t>(r)].free_energy;
  }
  const auto qr = a.colPivHouseholderQr();
  if (qr.rank() < cols) throw DomainError("fit_lambda: rank-deficient design");
  const Eigen::VectorXd c = qr.solve(b);
  fit.lambda_hat = c(0);
  if (fit.used_log_log) {
    fit.m_minus_1 = c(1);
    fit.intercept = c(2);
  } else {
    fit.intercept = c(1);
  }
  Eigen::VectorXd residual = a.lazyProduct(c);
  residual -= b;
  fit.residual_rms = std::sqrt(residual.squaredNorm() / static_cast<double>(rows));
  return fit;
}

double step_halving_change(const LaurentPolynomial& h, const QuadratureSpec& spec) {
  QuadratureSpec coarse = spec;
  coarse.method = QuadratureMethod::grid;
  QuadratureSpec fine = coarse;
  fine.points_per_axis *= 2;
  const auto a = estimate_free_energy(h, coarse);
  const auto b = estimate_free_energy(h, fine);
  return std::fabs(a.back().free_energy - b.back().free_energy);
}

}  // namespace toric
