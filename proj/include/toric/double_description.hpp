#pragma once

#include "toric/arith.hpp"

#include <vector>

namespace toric {

struct ConeGenerators {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
};

// Generators of {y in Q^dim : a . y >= 0 for every a in inequalities}.
// Rays are primitive, extreme modulo the lineality space, and sorted.
ConeGenerators generators_of(const std::vector<LatticeVector>& inequalities, int dim);

// Same, restricted to the subspace {y : e . y == 0 for e in equations}.
ConeGenerators generators_of(const std::vector<LatticeVector>& inequalities,
                             const std::vector<LatticeVector>& equations, int dim);

}  // namespace toric
