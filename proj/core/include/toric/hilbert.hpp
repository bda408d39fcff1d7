#pragma once

#include <optional>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// Placing triangulation over the generators in their stored order. Each
/// piece is simplicial and generated by a subset of c's generators. Throws
/// DomainError when c is not pointed.
std::vector<Cone> triangulate(const Cone& c);

struct HilbertBasis {
  Cone cone;
  std::vector<LatticeVector> elements;  // sorted lexicographically
};

/// Minimal generating set of the monoid c ∩ Z^n. Throws DomainError when c
/// is not pointed.
HilbertBasis hilbert_basis(const Cone& c);

/// Nonnegative coefficients of v over hilbert_basis(c).elements, or nullopt
/// when v is not in c ∩ Z^n.
std::optional<std::vector<Integer>> monoid_membership(const Cone& c, const LatticeVector& v);

/// Exponent vectors of the monomial generators of the chart ring C[dual(c) ∩ Z^n].
/// When dual(c) has a lineality lattice K, the answer is the lifted Hilbert
/// basis of the pointed quotient together with ±(basis of K).
std::vector<LatticeVector> chart_ring_generators(const Cone& c);

}  // namespace toric
