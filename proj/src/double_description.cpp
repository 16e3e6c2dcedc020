#include "toric/double_description.hpp"
#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

namespace {

using TightSet = std::vector<bool>;

TightSet tight_set(const LatticeVector& r, const std::vector<LatticeVector>& processed) {
  TightSet t(processed.size());
  for (std::size_t i = 0; i < processed.size(); ++i) t[i] = dot(processed[i], r) == 0;
  return t;
}

bool subset_of(const TightSet& a, const TightSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

ConeGenerators generators_of(const std::vector<LatticeVector>& inequalities, int dim) {
  std::vector<LatticeVector> lin;
  for (int i = 0; i < dim; ++i) lin.push_back(unit_vector(dim, i));
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> processed;

  for (const auto& a : inequalities) {
    if (is_zero(a)) continue;
    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const auto& l) { return dot(a, l) != 0; });
    if (pivot != lin.end()) {
      LatticeVector l0 = *pivot;
      lin.erase(pivot);
      Integer s = dot(a, l0);
      if (s < 0) {
        l0 = -l0;
        s = -s;
      }
      for (auto& l : lin) {
        Integer t = dot(a, l);
        if (t != 0) l = primitive(LatticeVector(l * s - l0 * t));
      }
      for (auto& r : rays) {
        Integer t = dot(a, r);
        if (t != 0) r = primitive(LatticeVector(r * s - l0 * t));
      }
      rays.push_back(l0);
      processed.push_back(a);
      continue;
    }

    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i]);
    std::vector<TightSet> tight(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) tight[i] = tight_set(rays[i], processed);

    std::vector<LatticeVector> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        TightSet common(processed.size());
        for (std::size_t k = 0; k < processed.size(); ++k) common[k] = tight[p][k] && tight[q][k];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (subset_of(common, tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        next.push_back(primitive(LatticeVector(rays[q] * val[p] - rays[p] * val[q])));
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  sort_unique_lex(rays);
  return {std::move(rays), std::move(lin)};
}

ConeGenerators generators_of(const std::vector<LatticeVector>& inequalities,
                             const std::vector<LatticeVector>& equations, int dim) {
  if (equations.empty()) return generators_of(inequalities, dim);
  IntegerMatrix k = left_kernel(IntegerMatrix(stack_rows(equations, dim).transpose()));
  const int sub = static_cast<int>(k.rows());
  std::vector<LatticeVector> local;
  for (const auto& a : inequalities) local.push_back(k * a);
  ConeGenerators g = generators_of(local, sub);
  ConeGenerators out;
  for (const auto& r : g.rays) out.rays.push_back(primitive(LatticeVector(k.transpose() * r)));
  for (const auto& l : g.lineality) out.lineality.push_back(LatticeVector(k.transpose() * l));
  sort_unique_lex(out.rays);
  return out;
}

}  // namespace toric
