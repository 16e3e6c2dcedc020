#pragma once

#include "toric/cone.hpp"

#include <vector>

namespace toric {

// A fan, kept as its maximal cones in canonical order. Two fans are equal
// exactly when their canonical maximal-cone lists agree.
class Fan {
public:
  explicit Fan(int ambient_dim = 0);

  // Trusted constructor for cones already known to form a fan; drops
  // non-maximal cones and canonicalizes the order.
  static Fan from_maximal(std::vector<Cone> cones, int ambient_dim);
  // Trusted constructor for sorted, distinct maximal cones.
  static Fan from_sorted_maximal(std::vector<Cone> cones, int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const;
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  std::vector<LatticeVector> rays() const;
  std::vector<Cone> cones() const;
  bool has_cone(const Cone& tau) const;
  bool is_simplicial() const;
  bool is_regular() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.maximal_ == b.maximal_;
  }

private:
  int ambient_dim_;
  std::vector<Cone> maximal_;
};

// Validates that any two cones meet in a common face. Throws NotAFan.
Fan make_fan(const std::vector<Cone>& cones, int ambient_dim);

std::vector<Cone> star(const Fan& fan, const Cone& tau);
std::vector<Cone> closed_star(const Fan& fan, const Cone& tau);

struct StarSubdivision {
  Fan fan;
  Cone carrier;
  bool regular = false;
};

StarSubdivision star_subdivide(const Fan& fan, const LatticeVector& rho);
Fan star_subdivision(const Fan& fan, const LatticeVector& rho);

// The fan F' with star_subdivision(F', center) == fan, where the new ray
// sits in the relative interior of carrier. Throws NotApplicable.
Fan inverse_star_subdivision(const Fan& fan, const LatticeVector& center, const Cone& carrier);

bool same_support(const Fan& a, const Fan& b);
bool is_subdivision(const Fan& refined, const Fan& coarse);
Fan common_refinement(const Fan& a, const Fan& b);
Fan product(const Fan& a, const Fan& b);
Fan join(const Fan& a, const Fan& b);
Fan restrict(const Fan& fan, const Cone& sigma);
Cone locate(const Fan& fan, const LatticeVector& x);

std::vector<Cone> triangulate(const Cone& sigma);
Fan pulling_triangulation(const Fan& fan);

// Volume of a simplicial piece of sigma (same dimension) normalized by the
// sum of the facet functionals of sigma; additive over subdivisions.
Rational normalized_volume(const Cone& piece, const Cone& sigma);

}  // namespace toric
