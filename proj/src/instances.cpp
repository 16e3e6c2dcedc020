#include "toric/instances.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <random>

namespace toric {

Fan random_simplicial_fan(std::uint64_t seed, int dim, long long bound, const Integer& det_cap) {
  if (dim < 1 || bound < 1) throw Error(ErrorCode::DimensionMismatch, "random fan needs dim >= 1 and bound >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> entry(-bound, bound);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<LatticeVector> gens;
    for (int i = 0; i < dim; ++i) {
      LatticeVector g(dim);
      for (int j = 0; j < dim; ++j) g(j) = entry(rng);
      gens.push_back(std::move(g));
    }
    if (rank(gens, dim) != dim) continue;
    Cone sigma = make_cone(gens, dim);
    if (sigma.multiplicity() > det_cap) continue;
    Fan fan = Fan::from_maximal({sigma}, dim);
    const auto extra = rng() % static_cast<std::uint64_t>(dim);
    for (std::uint64_t s = 0; s < extra; ++s) {
      LatticeVector p = LatticeVector::Zero(dim);
      for (const auto& r : sigma.rays()) p += r * Integer(rng() % 3);
      if (is_zero(p)) continue;
      p = primitive(p);
      if (p.cwiseAbs().maxCoeff() > bound) continue;
      const auto& rays = fan.rays();
      if (std::any_of(rays.begin(), rays.end(), [&](const auto& r) { return same(r, p); })) continue;
      Fan next = star_subdivision(fan, p);
      const auto& cones = next.maximal_cones();
      if (std::all_of(cones.begin(), cones.end(), [&](const Cone& c) { return c.multiplicity() <= det_cap; }))
        fan = std::move(next);
    }
    return fan;
  }
  throw Error(ErrorCode::StepLimitExceeded, "no random fan found");
}

}  // namespace toric
