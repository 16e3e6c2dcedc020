#pragma once

#include "toric/fan.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

// Quotient map N+ -> N+ / Z v for a primitive collapse vector v. For
// v = e_last this drops the last coordinate.
class Collapse {
public:
  explicit Collapse(const LatticeVector& v);

  const LatticeVector& vector() const { return v_; }
  int ambient_dim() const { return static_cast<int>(v_.size()); }
  int quotient_dim() const { return ambient_dim() - 1; }

  LatticeVector project(const LatticeVector& x) const;
  // A preimage of y.
  LatticeVector lift(const LatticeVector& y) const;
  // Image cone; throws RayAlongCollapse or ImageNotStrictlyConvex.
  Cone project(const Cone& sigma) const;
  // True when v lies in the linear span of sigma.
  bool is_dependent(const Cone& sigma) const { return sigma.in_span(v_); }

private:
  LatticeVector v_;
  IntegerMatrix projection_;
  IntegerMatrix section_;
};

// Relation sum r_i w_i = 0 among the primitive projected rays w_i of a
// dependent simplicial cone, scaled so that |r_i| is the multiplicity of the
// projected face omitting ray i and signed so that sum (r_i / c_i) v_i = alpha v
// with alpha > 0, where pi(v_i) = c_i w_i.
struct NormalRelation {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> projected;
  std::vector<Integer> contents;
  std::vector<Integer> coefficients;
  Rational alpha;

  std::vector<std::size_t> positive() const;
  std::vector<std::size_t> negative() const;
  std::vector<std::size_t> null() const;
  // Rays with a nonzero coefficient.
  std::vector<LatticeVector> support() const;
};

// Throws NotDependent, NotSimplicial or RayAlongCollapse.
NormalRelation normal_relation(const Cone& delta, const Collapse& collapse);
// Empty for independent cones.
std::optional<NormalRelation> classify(const Cone& delta, const Collapse& collapse);

struct Circuit {
  Cone cone;
  NormalRelation relation;
};

// Minimal dependent face of a dependent simplicial cone.
Cone circuit_of(const Cone& delta, const Collapse& collapse);

struct DefiniteFaces {
  Fan lower;   // faces omitting a ray with r_i < 0
  Fan upper;   // faces omitting a ray with r_i > 0
  Cone minus;  // rays with r_i <= 0
  Cone plus;   // rays with r_i >= 0
};

DefiniteFaces definite_faces(const Cone& delta, const Collapse& collapse);

// Primitive vector on the ray through the sum of the two extreme lifts of w
// to delta, or through the unique lift when delta is independent.
// Throws NotInProjection.
LatticeVector mid(const LatticeVector& w, const Cone& delta, const Collapse& collapse);

// Sum of the projected primitive rays with r_i of the given sign (+1 or -1).
LatticeVector ctr(const NormalRelation& relation, int sign);

class Cobordism {
public:
  const Fan& fan() const { return fan_; }
  const Collapse& collapse() const { return collapse_; }
  // Cones whose relative interior leaves the support when moved along +v.
  const Fan& minus_boundary() const { return minus_; }
  // Cones whose relative interior leaves the support when moved along -v.
  const Fan& plus_boundary() const { return plus_; }
  const Fan& projected_minus() const { return projected_minus_; }
  const Fan& projected_plus() const { return projected_plus_; }

  std::vector<Circuit> circuits() const;

private:
  Cobordism(Fan fan, Collapse collapse) : fan_(std::move(fan)), collapse_(std::move(collapse)) {}
  Fan fan_;
  Collapse collapse_;
  Fan minus_, plus_, projected_minus_, projected_plus_;

  friend Cobordism build_cobordism(Fan fan, const LatticeVector& v, bool check);
};

// Throws ImageNotStrictlyConvex, RayAlongCollapse or BoundaryNotFan.
Cobordism make_cobordism(Fan fan, const LatticeVector& v);
Cobordism make_cobordism(Fan fan);

// Cobordism structure on a subdivision of b.fan() with the same support, such
// as a sequence of star subdivisions. The boundary images are subdivisions of
// those of b, so their pairwise validation is skipped.
Cobordism subdivided_cobordism(const Cobordism& b, Fan fan);

// Fan of all faces of sigma with v = e_last.
Cobordism single_cone_cobordism(const Cone& sigma);

// Fan of all faces of a random simplicial cone in Z^dim with coordinates
// bounded by bound and v = e_last.
Cobordism random_cobordism(std::uint64_t seed, int dim, long long bound);
// The same cone, star subdivided at up to dim - 1 random interior points.
Cobordism random_stacked_cobordism(std::uint64_t seed, int dim, long long bound);

}  // namespace toric
