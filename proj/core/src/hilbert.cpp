#include "toric/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

// The cone re-expressed in coordinates of its span lattice, where it is full
// dimensional.
struct SpanView {
  IntegerMatrix basis;                 // n x k
  std::vector<LatticeVector> gens;     // generators in span coordinates, stored order
  std::size_t k = 0;
};

SpanView span_view(const Cone& c) {
  SpanView v;
  v.basis = span_lattice_basis(c);
  v.k = v.basis.cols();
  for (const auto& g : c.generators()) v.gens.push_back(span_coordinates(v.basis, g));
  return v;
}

using Simplex = std::vector<std::size_t>;  // sorted generator indices

LatticeVector facet_normal(const std::vector<LatticeVector>& gens, const Simplex& facet,
                           std::size_t opposite, std::size_t k) {
  std::vector<LatticeVector> rows;
  for (auto i : facet) rows.push_back(gens[i]);
  const auto ker = integer_kernel(IntegerMatrix::from_rows(rows, k));
  LatticeVector n = ker.front();
  if (dot(n, gens[opposite]) < 0) n = -n;
  return n;
}

std::vector<Simplex> placing_triangulation(const std::vector<LatticeVector>& gens, std::size_t k) {
  if (k == 0 || gens.empty()) return {};
  Simplex initial;
  std::vector<LatticeVector> picked;
  for (std::size_t i = 0; i < gens.size() && picked.size() < k; ++i) {
    picked.push_back(gens[i]);
    if (rank(picked, k) == picked.size()) {
      initial.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  std::vector<Simplex> simplices{initial};
  if (k == 1) return simplices;

  for (std::size_t p = 0; p < gens.size(); ++p) {
    if (std::find(initial.begin(), initial.end(), p) != initial.end()) continue;
    // facet -> (occurrences, opposite vertex)
    std::map<Simplex, std::pair<int, std::size_t>> facets;
    for (const auto& s : simplices) {
      for (std::size_t t = 0; t < s.size(); ++t) {
        Simplex f;
        for (std::size_t u = 0; u < s.size(); ++u)
          if (u != t) f.push_back(s[u]);
        auto& entry = facets[f];
        ++entry.first;
        entry.second = s[t];
      }
    }
    std::vector<Simplex> added;
    for (const auto& [f, info] : facets) {
      if (info.first != 1) continue;
      if (dot(facet_normal(gens, f, info.second, k), gens[p]) < 0) {
        Simplex s = f;
        s.push_back(p);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  return simplices;
}

// Lattice points of the half-open parallelepiped sum(lambda_i v_i), 0 <= lambda_i < 1,
// one per coset of Z^k / V Z^k (coset representatives from the Smith form).
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& vs,
                                                 std::size_t k) {
  const IntegerMatrix v = IntegerMatrix::from_columns(vs, k);
  const SmithForm s = smith_normal_form(v);
  const auto p_inv_q = rational_inverse(s.left);
  IntegerMatrix p_inv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p_inv(i, j) = numerator(p_inv_q[i][j]);
  const auto v_inv = rational_inverse(v);

  std::vector<LatticeVector> out;
  LatticeVector y(k);
  for (;;) {
    const LatticeVector x = p_inv * y;
    // Reduce x modulo V Z^k: keep the fractional parts of V^{-1} x.
    std::vector<Rational> exact(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational lambda = 0;
      for (std::size_t j = 0; j < k; ++j) lambda += v_inv[i][j] * Rational(x[j]);
      const Rational frac = lambda - Rational(floor(lambda));
      for (std::size_t r = 0; r < k; ++r) exact[r] += frac * Rational(vs[i][r]);
    }
    LatticeVector q(k);
    for (std::size_t r = 0; r < k; ++r) q[r] = numerator(exact[r]);
    if (!q.is_zero()) out.push_back(std::move(q));

    // Advance the mixed-radix counter y over [0, d_i).
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Integer d = i < s.invariants.size() ? s.invariants[i] : Integer(1);
      y[i] += 1;
      if (y[i] < d) break;
      y[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

std::vector<LatticeVector> compute_hilbert_basis(const Cone& c) {
  const SpanView view = span_view(c);
  const std::size_t k = view.k;
  if (k == 0) return {};
  const Cone local(k, view.gens);

  LatticeVector grading(k);
  for (const auto& b : local.halfspaces().normals) grading += b;

  std::set<LatticeVector> candidates(view.gens.begin(), view.gens.end());
  for (const auto& s : placing_triangulation(view.gens, k)) {
    std::vector<LatticeVector> vs;
    for (auto i : s) vs.push_back(view.gens[i]);
    for (auto& p : parallelepiped_points(vs, k)) candidates.insert(std::move(p));
  }

  std::vector<std::pair<Integer, LatticeVector>> ordered;
  for (const auto& x : candidates) ordered.emplace_back(dot(grading, x), x);
  std::sort(ordered.begin(), ordered.end());

  std::vector<std::pair<Integer, LatticeVector>> basis;
  for (const auto& [deg, x] : ordered) {
    bool reducible = false;
    for (const auto& [hdeg, h] : basis) {
      if (hdeg < deg && local.contains(x - h)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.emplace_back(deg, x);
  }

  std::vector<LatticeVector> out;
  for (const auto& [deg, x] : basis) out.push_back(view.basis * x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Cone> triangulate(const Cone& c) {
  if (!is_pointed(c)) throw DomainError("triangulate: cone " + to_string(c) + " is not pointed");
  const SpanView view = span_view(c);
  std::vector<Cone> out;
  for (const auto& s : placing_triangulation(view.gens, view.k)) {
    std::vector<LatticeVector> gens;
    for (auto i : s) gens.push_back(c.generators()[i]);
    out.emplace_back(c.ambient_dim(), gens);
  }
  return out;
}

HilbertBasis hilbert_basis(const Cone& c) {
  if (!is_pointed(c))
    throw DomainError("hilbert_basis: cone " + to_string(c) +
                      " is not pointed, its monoid has no finite minimal generating set");
  return {c, c.memo_hilbert(compute_hilbert_basis)};
}

std::optional<std::vector<Integer>> monoid_membership(const Cone& c, const LatticeVector& v) {
  const HilbertBasis hb = hilbert_basis(c);
  if (!c.contains(v)) return std::nullopt;
  std::vector<Integer> coef(hb.elements.size());
  LatticeVector rest = v;
  // Saturation: any h with rest - h in the cone leaves a monoid element behind,
  // so the greedy walk never gets stuck.
  while (!rest.is_zero()) {
    bool progressed = false;
    for (std::size_t i = 0; i < hb.elements.size(); ++i) {
      const LatticeVector& h = hb.elements[i];
      if (!c.contains(rest - h)) continue;
      Integer t = 1;
      while (c.contains(rest - (t + 1) * h)) ++t;
      rest -= t * h;
      coef[i] += t;
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  return coef;
}

std::vector<LatticeVector> chart_ring_generators(const Cone& c) {
  const Cone d = dual_cone(c);
  if (is_pointed(d)) return hilbert_basis(d).elements;

  const std::size_t n = c.ambient_dim();
  const auto k_basis = integer_kernel(IntegerMatrix::from_rows(c.generators(), n));
  const HermiteForm hf = hermite_normal_form(IntegerMatrix::from_rows(k_basis, n).transpose());
  const std::size_t r = hf.rank;
  const IntegerMatrix& u = hf.transform;

  std::vector<LatticeVector> out;
  for (const auto& kv : k_basis) {
    out.push_back(kv);
    out.push_back(-kv);
  }
  if (r < n) {
    std::vector<LatticeVector> projected;
    for (const auto& g : d.generators()) {
      LatticeVector y(n - r);
      for (std::size_t i = r; i < n; ++i) y[i - r] = dot(u.row(i), g);
      if (!y.is_zero()) projected.push_back(std::move(y));
    }
    const auto u_inv_q = rational_inverse(u);
    for (const auto& y : hilbert_basis(Cone(n - r, projected)).elements) {
      LatticeVector x(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) x[i] += numerator(u_inv_q[i][j]) * y[j - r];
      // Canonical representative modulo K.
      for (const auto& row : k_basis) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        x -= floor_div(x[p], row[p]) * row;
      }
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toric
