#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// H-representation: x is in the cone iff <b,x> >= 0 for every normal and
/// <e,x> = 0 for every equation. Normals are primitive and lie in the span of
/// the cone, so they are unique.
struct HalfspaceRep {
  std::vector<LatticeVector> normals;
  std::vector<LatticeVector> equations;
};

/// Finitely generated rational polyhedral cone Con(g_1, ..., g_r) in R^n.
///
/// Generators are made primitive and deduplicated (first occurrence wins, so
/// the input order survives). Both representations are computed at
/// construction; copies share them.
class Cone {
 public:
  /// The cone {0} in R^dim.
  explicit Cone(std::size_t dim);
  /// Throws DomainError on a zero generator or a dimension mismatch.
  Cone(std::size_t dim, const std::vector<LatticeVector>& generators);

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& generators() const noexcept;
  /// Extreme rays modulo the lineality space, sorted lexicographically.
  const std::vector<LatticeVector>& extreme_rays() const noexcept;
  const std::vector<LatticeVector>& lineality() const noexcept;
  const HalfspaceRep& halfspaces() const noexcept;

  /// Dimension of the linear span.
  std::size_t dimension() const noexcept;
  bool is_full_dimensional() const noexcept;
  bool is_simplicial() const noexcept;
  bool contains(const LatticeVector& x) const;

  /// Same point set (same canonical rays and lineality).
  bool same_set(const Cone& other) const;

  /// Hilbert basis memo, filled by the hilbert module on first request.
  const std::vector<LatticeVector>& memo_hilbert(
      const std::function<std::vector<LatticeVector>(const Cone&)>& compute) const;

 private:
  struct Data;
  std::size_t dim_;
  std::shared_ptr<Data> data_;
};

std::string to_string(const Cone& c);

Cone dual_cone(const Cone& c);
bool is_pointed(const Cone& c);
/// Throws DomainError when c is not pointed.
bool is_regular(const Cone& c);

/// Product of the Smith invariants of the extreme-ray matrix; 1 exactly when
/// the rays extend to a lattice basis.
Integer lattice_index(const std::vector<LatticeVector>& vectors, std::size_t dim);

Cone intersect(const Cone& a, const Cone& b);
/// The face {x in c : <u,x> = 0}; u must lie in the dual of c.
Cone face_cut(const Cone& c, const LatticeVector& u);

/// Basis (as columns of an n x k matrix) of the saturated lattice Z^n ∩ span(c).
IntegerMatrix span_lattice_basis(const Cone& c);
/// Coordinates of x (which must lie in the span) in the given span basis.
LatticeVector span_coordinates(const IntegerMatrix& basis, const LatticeVector& x);

struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> cones;
};

struct FanReport {
  bool valid = true;
  /// Indices of the first offending pair when invalid.
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  std::string reason;
  /// Separating witnesses u for every checked pair, in (i, j) order.
  std::vector<LatticeVector> witnesses;
};

/// Pairwise check that sigma_i ∩ sigma_j is a face of both, decided with a
/// separating linear form u taken from the relative interior of
/// sigma_i^dual ∩ (-sigma_j)^dual.
FanReport fan_validate(const Fan& f);

struct ConeIsomorphism {
  IntegerMatrix matrix;  // L with L(c1) = c2
  /// True when the cones are lower dimensional and L acts on span-lattice
  /// coordinates rather than on Z^n.
  bool projected = false;
};

/// Search over ordered ray tuples for a unimodular L mapping the extreme rays
/// of c1 onto those of c2. Throws DomainError on an ambient dimension mismatch
/// or a non-pointed cone.
std::optional<ConeIsomorphism> cone_isomorphism(const Cone& c1, const Cone& c2);

}  // namespace toric
