#include "toric/double_description.hpp"

#include <algorithm>

namespace toric {

namespace {

struct Ray {
  LatticeVector v;
  std::vector<bool> tight;  // constraint indices processed so far with <a,v> = 0
};

LatticeVector primitive_or_zero(const LatticeVector& v) {
  return v.is_zero() ? v : primitive(v);
}

// a*x - b*y, the usual elimination combination
LatticeVector combine(const Integer& a, const LatticeVector& x, const Integer& b,
                      const LatticeVector& y) {
  LatticeVector out = a * x;
  out -= b * y;
  return primitive_or_zero(out);
}

// Component of v orthogonal to span(basis), scaled to a primitive integer vector.
LatticeVector project_out(const LatticeVector& v, const std::vector<LatticeVector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  IntegerMatrix gram(k, k);
  LatticeVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  if (rhs.is_zero()) return v;
  const std::vector<Rational> c = solve_rational(gram, rhs);
  Integer common = 1;
  for (const auto& x : c) common = boost::multiprecision::lcm(common, denominator(x));
  LatticeVector out = common * v;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer coef = numerator(c[i] * Rational(common));
    out -= coef * basis[i];
  }
  return primitive_or_zero(out);
}

}  // namespace

ConeGenerators double_description(std::size_t dim, const std::vector<LatticeVector>& inequalities,
                                   const std::vector<LatticeVector>& equations) {
  std::vector<LatticeVector> constraints;
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw DomainError("double description: constraint dimension mismatch");
    if (!a.is_zero()) constraints.push_back(a);
  }
  for (const auto& e : equations) {
    if (e.size() != dim) throw DomainError("double description: constraint dimension mismatch");
    if (e.is_zero()) continue;
    constraints.push_back(e);
    constraints.push_back(-e);
  }

  std::vector<LatticeVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(LatticeVector::unit(dim, i));
  std::vector<Ray> rays;

  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const LatticeVector& a = constraints[c];
    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      LatticeVector l = *pivot;
      lineality.erase(pivot);
      Integer al = dot(a, l);
      if (al < 0) {
        l = -l;
        al = -al;
      }
      for (auto& other : lineality) {
        const Integer ao = dot(a, other);
        if (ao != 0) other = combine(al, other, ao, l);
      }
      for (auto& r : rays) {
        const Integer ar = dot(a, r.v);
        if (ar != 0) r.v = combine(al, r.v, ar, l);
        r.tight.push_back(true);
      }
      std::vector<bool> tight(c + 1, true);
      tight[c] = false;
      rays.push_back({primitive(l), std::move(tight)});
      continue;
    }

    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] >= 0) {
        Ray r = rays[i];
        r.tight.push_back(val[i] == 0);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        // Combinatorial adjacency: no third ray is tight wherever both are.
        std::vector<bool> common(c);
        for (std::size_t j = 0; j < c; ++j) common[j] = rays[p].tight[j] && rays[n].tight[j];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool covers = true;
          for (std::size_t j = 0; j < c; ++j)
            if (common[j] && !rays[r].tight[j]) {
              covers = false;
              break;
            }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        LatticeVector v = combine(val[p], rays[n].v, val[n], rays[p].v);
        std::vector<bool> tight = common;
        tight.push_back(true);
        next.push_back({std::move(v), std::move(tight)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  if (!lineality.empty()) {
    const HermiteForm hf = hermite_normal_form(IntegerMatrix::from_rows(lineality));
    for (std::size_t i = 0; i < hf.rank; ++i) out.lineality.push_back(hf.hermite.row(i));
  }
  for (const auto& r : rays) {
    LatticeVector v = project_out(r.v, out.lineality);
    if (!v.is_zero()) out.rays.push_back(std::move(v));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace toric
