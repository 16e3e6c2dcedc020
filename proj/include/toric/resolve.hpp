#pragma once

#include "toric/fan.hpp"

#include <cstddef>
#include <vector>

namespace toric {

struct ResolveOptions {
  Integer det_cap = default_det_cap;
  std::size_t max_steps = 100000;
};

struct Resolution {
  Fan fan;
  std::vector<LatticeVector> centers;
};

// Point of par(sigma) \ {0} with the smallest largest coordinate that is a minimal
// internal vector of the face it lies in. Every such face is a face of the
// singular part of sigma.
LatticeVector resolution_center(const Cone& sigma, const Integer& det_cap = default_det_cap);

// Multiplicities of the maximal cones, largest first.
std::vector<Integer> det_profile(const Fan& fan);

// Regular refinement of a simplicial fan by star subdivisions.
Resolution resolve_fan(const Fan& fan, const ResolveOptions& options = {});

Fan replay_centers(const Fan& fan, const std::vector<LatticeVector>& centers);

}  // namespace toric
