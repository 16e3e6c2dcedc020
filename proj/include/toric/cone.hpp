#pragma once

#include "toric/arith.hpp"
#include "toric/lattice.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace toric {

inline const Integer default_det_cap{1000000};

// Strictly convex rational polyhedral cone, stored by its primitive extreme
// rays in lexicographic order. Immutable and cheap to copy.
class Cone {
public:
  explicit Cone(int ambient_dim = 0);

  int ambient_dim() const { return data_->ambient_dim; }
  int dim() const { return data_->saturation.rank; }
  const std::vector<LatticeVector>& rays() const { return data_->rays; }
  // Inward facet normals as ambient functionals.
  const std::vector<LatticeVector>& facet_normals() const { return data_->facets; }
  const Saturation& lattice() const { return data_->saturation; }

  bool is_zero() const { return data_->rays.empty(); }
  bool is_simplicial() const { return static_cast<int>(data_->rays.size()) == dim(); }
  // Index of the ray lattice in N ∩ span, for simplicial cones; zero otherwise.
  const Integer& multiplicity() const { return data_->multiplicity; }
  bool is_regular() const { return is_simplicial() && data_->multiplicity == 1; }

  LatticeVector local(const LatticeVector& x) const;
  LatticeVector ambient(const LatticeVector& y) const;
  bool in_span(const LatticeVector& x) const;
  bool contains(const LatticeVector& x) const;
  bool contains(const Cone& other) const;
  bool has_ray(const LatticeVector& r) const;
  bool is_face(const Cone& other) const;
  // Smallest face containing the given rays of this cone.
  Cone face_spanned(const std::vector<LatticeVector>& rays) const;
  // Coefficients of x in the rays of a simplicial cone.
  RationalVector coefficients(const LatticeVector& x) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim() == b.ambient_dim() && lex_compare(a.rays(), b.rays()) == 0;
  }
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
    if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
    return lex_compare(a.rays(), b.rays());
  }

private:
  struct Data {
    int ambient_dim = 0;
    std::vector<LatticeVector> rays;
    Saturation saturation;
    std::vector<LatticeVector> facets;
    Integer multiplicity = 1;
  };
  explicit Cone(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend Cone make_cone(const std::vector<LatticeVector>&, int);
  friend Cone cone_from_extreme_rays(std::vector<LatticeVector>, int);
};

// Primitivizes, drops redundant generators and sorts. Throws NotStrictlyConvex.
Cone make_cone(const std::vector<LatticeVector>& generators, int ambient_dim);
// Trusted constructor: generators are already known to be the extreme rays.
Cone cone_from_extreme_rays(std::vector<LatticeVector> rays, int ambient_dim);
// {x : a.x >= 0, e.x == 0}; throws NotStrictlyConvex if it contains a line.
Cone cone_from_constraints(const std::vector<LatticeVector>& inequalities,
                           const std::vector<LatticeVector>& equations, int ambient_dim);

Cone intersect(const Cone& a, const Cone& b);
Cone cone_sum(const Cone& a, const Cone& b);

enum class Position { Outside, Boundary, RelativeInterior };

struct Membership {
  Position position = Position::Outside;
  std::optional<Cone> face;
};

Membership contains(const Cone& sigma, const LatticeVector& x);

// All faces, ordered by dimension then rays; includes {0} and sigma.
std::vector<Cone> faces(const Cone& sigma);
std::vector<Cone> facets(const Cone& sigma);

inline bool is_simplicial(const Cone& sigma) { return sigma.is_simplicial(); }
inline bool is_regular(const Cone& sigma) { return sigma.is_regular(); }

struct ParPoint {
  LatticeVector point;
  RationalVector alpha;
};

// Lattice points sum a_i v_i with a_i in [0,1), including 0.
std::vector<ParPoint> par_points(const Cone& sigma, const Integer& det_cap = default_det_cap);
std::vector<LatticeVector> par(const Cone& sigma, const Integer& det_cap = default_det_cap);
// Lattice points with coefficients in [0,1].
std::vector<LatticeVector> par_closed(const Cone& sigma, const Integer& det_cap = default_det_cap);

std::vector<LatticeVector> minimal_internal_vectors(const Cone& sigma,
                                                    const Integer& det_cap = default_det_cap);
// Irreducible nonzero points of par(sigma).
std::vector<LatticeVector> minimal_generators(const Cone& sigma,
                                              const Integer& det_cap = default_det_cap);

// (singular part, regular part) with sigma = sing ⊕ reg as lattice cones.
std::pair<Cone, Cone> sing_split(const Cone& sigma);

// True when sigma = a + b with spans meeting in 0 and N_sigma = N_a ⊕ N_b.
bool is_lattice_direct_sum(const Cone& sigma, const Cone& a, const Cone& b);

}  // namespace toric
