#pragma once

#include "toric/monomial.hpp"

#include <vector>

namespace toric {

// Points of sigma where every ideal's ord function equals its marker:
// ord(I_i)(x) = <m_i, x>. This is the face of the linearity subdivision of
// the product ideal on which it is given by the product of the markers.
// Throws MarkerNotGenerator when m_i is not a generator of I_i.
Cone inv_cone(const Cone& sigma, const std::vector<MonomialIdeal>& ideals, const std::vector<LatticeVector>& markers);

// Span of the ray sums of the marked faces of a regular cone. Throws
// NotSimplicial for a non-regular cone and NotAFace for a marked cone that is
// not a face.
Cone stab_regular(const Cone& sigma, const std::vector<Cone>& marked);

}  // namespace toric
