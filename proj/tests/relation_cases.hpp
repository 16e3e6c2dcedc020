#pragma once

// Random dependent cones with star subdivision centers of both kinds, for
// checking the relation-update formulas.

#include "oracles.hpp"
#include "toric/cobordism.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace toric;

struct UpdateTrial {
  Cone delta;
  LatticeVector center;
  Cone child;
  std::string expected;  // "1a", "1b", "2a" or "2b"
};

// A simplicial full-dimensional cone in Z^dim whose circuit has circuit_size
// rays; the remaining rays get coefficient zero.
inline std::optional<Cone> random_dependent_cone(std::mt19937_64& rng, int dim, int circuit_size, int bound) {
  const LatticeVector v = unit_vector(dim, dim - 1);
  std::vector<LatticeVector> rays;
  for (int i = 0; i + 1 < circuit_size; ++i) rays.push_back(oracle::random_vector(rng, dim, bound));
  LatticeVector last = v * Integer(static_cast<long>(rng() % 2) + 1) * Integer(rng() % 2 ? 1 : -1);
  for (const auto& r : rays) last += r * Integer(static_cast<long>(rng() % 5) - 2);
  rays.push_back(last);
  for (int i = circuit_size; i < dim; ++i) rays.push_back(oracle::random_vector(rng, dim, bound));
  for (auto& r : rays) {
    if (is_zero(r)) return std::nullopt;
    r = primitive(r);
    if (is_zero(oracle::drop_last(r))) return std::nullopt;
  }
  if (rank(rays, dim) != dim) return std::nullopt;
  Cone delta = make_cone(rays, dim);
  if (!delta.is_simplicial() || delta.contains(v) || delta.contains(LatticeVector(-v))) return std::nullopt;
  return delta;
}

inline int sign_in(const NormalRelation& rel, const LatticeVector& ray) {
  for (std::size_t i = 0; i < rel.rays.size(); ++i)
    if (same(rel.rays[i], ray)) return rel.coefficients[i] > 0 ? 1 : rel.coefficients[i] < 0 ? -1 : 0;
  return 0;
}

inline void add_children(std::vector<UpdateTrial>& out, const Cone& delta, const LatticeVector& center,
                         const Collapse& col, const NormalRelation& rel, int orientation, char family) {
  Fan fan = star_subdivision(Fan::from_maximal({delta}, delta.ambient_dim()), center);
  for (const auto& child : fan.maximal_cones()) {
    if (!child.has_ray(center) || !col.is_dependent(child)) continue;
    LatticeVector removed;
    for (const auto& r : delta.rays())
      if (!child.has_ray(r)) removed = r;
    const int s = orientation * sign_in(rel, removed);
    std::string label(1, family);
    label += s > 0 ? "a" : "b";
    if (family == '1' && s == 0) continue;
    out.push_back(UpdateTrial{delta, center, child, label});
  }
}

// All children for every circuit center and for one interior point over each
// codefinite independent face of dimension at least two.
inline std::vector<UpdateTrial> relation_update_trials(std::mt19937_64& rng, const Cone& delta) {
  const int dim = delta.ambient_dim();
  const Collapse col(unit_vector(dim, dim - 1));
  const NormalRelation rel = normal_relation(delta, col);
  std::vector<UpdateTrial> out;
  for (int s : {1, -1}) add_children(out, delta, mid(ctr(rel, s), delta, col), col, rel, s, '1');
  for (const auto& tau : faces(delta)) {
    if (tau.dim() < 2 || col.is_dependent(tau)) continue;
    int pos = 0, neg = 0;
    for (const auto& r : tau.rays()) {
      const int s = sign_in(rel, r);
      pos += s > 0;
      neg += s < 0;
    }
    if (pos > 0 && neg > 0) continue;
    Cone image = col.project(tau);
    std::vector<LatticeVector> points;
    for (const auto& p : par(image, Integer(100000)))
      if (!is_zero(p)) points.push_back(p);
    LatticeVector w = LatticeVector::Zero(dim - 1);
    if (!points.empty()) {
      w = points[rng() % points.size()];
    } else {
      for (const auto& r : image.rays()) w += r * Integer(static_cast<long>(rng() % 2) + 1);
    }
    add_children(out, delta, mid(w, tau, col), col, rel, neg > 0 ? -1 : 1, '2');
  }
  return out;
}

}  // namespace testing
