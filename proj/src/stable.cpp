#include "toric/stable.hpp"

#include "toric/error.hpp"

#include <algorithm>

namespace toric {

Cone inv_cone(const Cone& sigma, const std::vector<MonomialIdeal>& ideals, const std::vector<LatticeVector>& markers) {
  if (ideals.size() != markers.size())
    throw Error(ErrorCode::DimensionMismatch, "one marker per ideal is needed");
  const int n = sigma.ambient_dim();
  std::vector<LatticeVector> ineq = sigma.facet_normals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& gens = ideals[i].generators();
    if (!(ideals[i].cone() == sigma)) throw Error(ErrorCode::DimensionMismatch, "ideal lives on another cone");
    if (std::none_of(gens.begin(), gens.end(), [&](const auto& g) { return same(g, markers[i]); }))
      throw Error(ErrorCode::MarkerNotGenerator, to_string(markers[i]) + " is not a generator of ideal " +
                                                     std::to_string(i));
    for (const auto& g : gens)
      if (!same(g, markers[i])) ineq.push_back(g - markers[i]);
  }
  std::vector<LatticeVector> eq;
  const auto& e = sigma.lattice().equations;
  for (Eigen::Index j = 0; j < e.cols(); ++j) eq.push_back(e.col(j));
  return cone_from_constraints(ineq, eq, n);
}

Cone stab_regular(const Cone& sigma, const std::vector<Cone>& marked) {
  if (!sigma.is_regular()) throw Error(ErrorCode::NotSimplicial, to_string(sigma.rays()) + " is not regular");
  std::vector<LatticeVector> sums;
  for (const auto& tau : marked) {
    if (!sigma.is_face(tau)) throw Error(ErrorCode::NotAFace, to_string(tau.rays()) + " is not a face");
    LatticeVector s = LatticeVector::Zero(sigma.ambient_dim());
    for (const auto& r : tau.rays()) s += r;
    if (!is_zero(s)) sums.push_back(s);
  }
  return make_cone(sums, sigma.ambient_dim());
}

}  // namespace toric
