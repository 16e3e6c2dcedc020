#include "toric/resolve.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<bool> support(const RationalVector& alpha) {
  std::vector<bool> s(static_cast<std::size_t>(alpha.size()));
  for (Eigen::Index i = 0; i < alpha.size(); ++i) s[static_cast<std::size_t>(i)] = alpha(i) != 0;
  return s;
}

bool dominated(const RationalVector& a, const RationalVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

}  // namespace

LatticeVector resolution_center(const Cone& sigma, const Integer& det_cap) {
  auto pts = par_points(sigma, det_cap);
  // Among minimal candidates prefer the smallest largest coordinate: every new
  // cone of the subdivided simplex has multiplicity alpha_i * mult(sigma).
  std::optional<std::size_t> best;
  auto key = [&](std::size_t i) {
    const auto& a = pts[i].alpha;
    return std::pair{a.maxCoeff(), a.sum()};
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (is_zero(pts[i].point)) continue;
    auto s = support(pts[i].alpha);
    bool minimal = true;
    for (std::size_t j = 0; j < pts.size() && minimal; ++j) {
      if (j == i || is_zero(pts[j].point)) continue;
      if (support(pts[j].alpha) == s && dominated(pts[j].alpha, pts[i].alpha)) minimal = false;
    }
    if (!minimal) continue;
    if (!best || key(i) < key(*best) || (key(i) == key(*best) && lex_compare(pts[i].point, pts[*best].point) < 0))
      best = i;
  }
  if (!best) throw Error(ErrorCode::NotApplicable, to_string(sigma.rays()) + " is already regular");
  return pts[*best].point;
}

std::vector<Integer> det_profile(const Fan& fan) {
  std::vector<Integer> out;
  for (const auto& c : fan.maximal_cones()) out.push_back(c.multiplicity());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Resolution resolve_fan(const Fan& fan, const ResolveOptions& options) {
  if (!fan.is_simplicial()) throw Error(ErrorCode::NotSimplicial, "resolution needs a simplicial fan");
  for (const auto& c : fan.maximal_cones())
    if (c.multiplicity() > options.det_cap)
      throw Error(ErrorCode::DetTooLarge, to_string(c.rays()) + " has multiplicity " + c.multiplicity().str());

  Resolution out{fan, {}};
  while (true) {
    const Cone* worst = nullptr;
    for (const auto& c : out.fan.maximal_cones())
      if (!worst || c.multiplicity() > worst->multiplicity()) worst = &c;
    if (!worst || worst->multiplicity() <= 1) break;
    if (out.centers.size() >= options.max_steps)
      throw Error(ErrorCode::StepLimitExceeded, std::to_string(options.max_steps) + " star subdivisions");
    LatticeVector center = resolution_center(*worst, options.det_cap);
    out.fan = star_subdivision(out.fan, center);
    out.centers.push_back(std::move(center));
  }
  return out;
}

Fan replay_centers(const Fan& fan, const std::vector<LatticeVector>& centers) {
  Fan f = fan;
  for (const auto& c : centers) f = star_subdivision(f, c);
  return f;
}

}  // namespace toric
