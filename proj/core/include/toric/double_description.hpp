#pragma once

#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Generators of {x : <a,x> >= 0 for a in inequalities, <e,x> = 0 for e in
/// equations}: extreme rays of the pointed part plus a lineality basis.
/// Rays are primitive, orthogonal to the lineality space and sorted; the
/// lineality basis is in Hermite normal form.
struct ConeGenerators {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
};

ConeGenerators double_description(std::size_t dim, const std::vector<LatticeVector>& inequalities,
                                   const std::vector<LatticeVector>& equations = {});

}  // namespace toric
