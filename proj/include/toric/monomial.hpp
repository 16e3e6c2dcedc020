#pragma once

#include "toric/fan.hpp"

#include <vector>

namespace toric {

// Monomial ideal on the affine chart of sigma, given by exponent vectors in
// the dual lattice that are nonnegative on sigma.
class MonomialIdeal {
public:
  MonomialIdeal(const Cone& sigma, std::vector<LatticeVector> generators);

  const Cone& cone() const { return sigma_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

private:
  Cone sigma_;
  std::vector<LatticeVector> generators_;
};

// u -> sum over factors of min over generators of <m, u>.
class OrdFunction {
public:
  explicit OrdFunction(std::vector<MonomialIdeal> factors);

  const Cone& cone() const { return factors_.front().cone(); }
  const std::vector<MonomialIdeal>& factors() const { return factors_; }

  friend OrdFunction operator*(const OrdFunction& a, const OrdFunction& b);

private:
  std::vector<MonomialIdeal> factors_;
};

Integer ord_eval(const OrdFunction& f, const LatticeVector& u);

struct LinearPiece {
  Cone cone;
  LatticeVector form;
};

struct LinearitySubdivision {
  Fan fan;
  std::vector<LinearPiece> pieces;
};

// Coarsest subdivision of sigma on whose cones f is linear, with the form.
LinearitySubdivision linearity_subdivision(const OrdFunction& f);

// The normalized blow-up of the valuation ideal at v: the star subdivision.
Fan valuation_blowup(const Fan& fan, const LatticeVector& v);

}  // namespace toric
