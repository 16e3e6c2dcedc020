#pragma once

#include "toric/fan.hpp"

#include <cstdint>

namespace toric {

// A random simplicial full-dimensional cone with entries in [-bound, bound]
// and multiplicity at most det_cap, star subdivided at up to dim - 1 random
// integer combinations of its rays. Every ray stays within the bound and every
// cone within the cap. Deterministic in seed.
Fan random_simplicial_fan(std::uint64_t seed, int dim, long long bound, const Integer& det_cap);

}  // namespace toric
