#include "toric/fan.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace toric {

namespace {

bool rays_subset(const Cone& a, const Cone& b) {
  if (a.rays().size() > b.rays().size()) return false;
  return std::all_of(a.rays().begin(), a.rays().end(), [&](const auto& r) { return b.has_ray(r); });
}

std::vector<Cone> keep_maximal(std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  // Only cones sharing the first ray of cones[i] can contain it.
  std::map<LatticeVector, std::vector<std::size_t>, LexLess> by_ray;
  for (std::size_t j = 0; j < cones.size(); ++j)
    for (const auto& r : cones[j].rays()) by_ray[r].push_back(j);
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool covered = cones[i].rays().empty() && cones.size() > 1;
    if (!cones[i].rays().empty()) {
      for (std::size_t j : by_ray[cones[i].rays().front()]) {
        if (j != i && cones[i].rays().size() < cones[j].rays().size() && rays_subset(cones[i], cones[j])) {
          covered = true;
          break;
        }
      }
    }
    if (!covered) out.push_back(cones[i]);
  }
  return out;
}

LatticeVector ray_sum(const Cone& c) {
  LatticeVector s = LatticeVector::Zero(c.ambient_dim());
  for (const auto& r : c.rays()) s += r;
  return s;
}

std::vector<LatticeVector> with_ray(std::vector<LatticeVector> rays, const LatticeVector& r) {
  rays.push_back(r);
  return rays;
}

}  // namespace

Fan::Fan(int ambient_dim) : ambient_dim_(ambient_dim), maximal_{Cone(ambient_dim)} {}

Fan Fan::from_maximal(std::vector<Cone> cones, int ambient_dim) {
  Fan f(ambient_dim);
  if (cones.empty()) return f;
  f.maximal_ = keep_maximal(std::move(cones));
  return f;
}

Fan Fan::from_sorted_maximal(std::vector<Cone> cones, int ambient_dim) {
  Fan f(ambient_dim);
  if (!cones.empty()) f.maximal_ = std::move(cones);
  return f;
}

int Fan::dim() const {
  int d = 0;
  for (const auto& c : maximal_) d = std::max(d, c.dim());
  return d;
}

std::vector<LatticeVector> Fan::rays() const {
  std::vector<LatticeVector> out;
  for (const auto& c : maximal_) out.insert(out.end(), c.rays().begin(), c.rays().end());
  sort_unique_lex(out);
  return out;
}

std::vector<Cone> Fan::cones() const {
  std::vector<Cone> out;
  for (const auto& c : maximal_) {
    auto f = faces(c);
    out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Fan::has_cone(const Cone& tau) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) { return c.is_face(tau); });
}

bool Fan::is_simplicial() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return c.is_simplicial(); });
}

bool Fan::is_regular() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return c.is_regular(); });
}

Fan make_fan(const std::vector<Cone>& cones, int ambient_dim) {
  for (const auto& c : cones)
    if (c.ambient_dim() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "cone dimension");
  std::vector<Cone> all = cones;
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      Cone meet = intersect(all[i], all[j]);
      if (!all[i].is_face(meet) || !all[j].is_face(meet))
        throw Error(ErrorCode::NotAFan, to_string(all[i].rays()) + " and " + to_string(all[j].rays()) +
                                            " meet in " + to_string(meet.rays()) + ", not a common face");
    }
  }
  return Fan::from_maximal(std::move(all), ambient_dim);
}

std::vector<Cone> star(const Fan& fan, const Cone& tau) {
  if (!fan.has_cone(tau)) throw Error(ErrorCode::NotAFace, to_string(tau.rays()) + " is not a cone of the fan");
  std::vector<Cone> out;
  for (const auto& c : fan.cones())
    if (c.is_face(tau)) out.push_back(c);
  return out;
}

std::vector<Cone> closed_star(const Fan& fan, const Cone& tau) {
  if (!fan.has_cone(tau)) throw Error(ErrorCode::NotAFace, to_string(tau.rays()) + " is not a cone of the fan");
  std::vector<Cone> out;
  for (const auto& c : fan.maximal_cones()) {
    if (!c.is_face(tau)) continue;
    auto f = faces(c);
    out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StarSubdivision star_subdivide(const Fan& fan, const LatticeVector& rho_in) {
  if (rho_in.size() != fan.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "ray length");
  const LatticeVector rho = primitive(rho_in);
  std::optional<Cone> carrier;
  for (const auto& c : fan.maximal_cones()) {
    if (!c.contains(rho)) continue;
    carrier = c.face_spanned({rho});
    break;
  }
  if (!carrier) throw Error(ErrorCode::RayNotInSupport, to_string(rho) + " is outside the support");
  if (carrier->dim() == 1) throw Error(ErrorCode::RayOnExistingRay, to_string(rho) + " is already a ray");

  // Cones away from the carrier stay maximal and keep their order.
  std::vector<Cone> kept, next;
  for (const auto& c : fan.maximal_cones()) {
    if (!rays_subset(*carrier, c)) {
      kept.push_back(c);
      continue;
    }
    if (c.is_simplicial()) {
      for (const auto& u : carrier->rays()) {
        std::vector<LatticeVector> r;
        for (const auto& v : c.rays())
          if (!same(v, u)) r.push_back(v);
        next.push_back(cone_from_extreme_rays(with_ray(std::move(r), rho), fan.ambient_dim()));
      }
      continue;
    }
    for (const auto& f : facets(c)) {
      if (rays_subset(*carrier, f)) continue;
      next.push_back(cone_from_extreme_rays(with_ray(f.rays(), rho), fan.ambient_dim()));
    }
  }
  bool regular = carrier->is_regular() && same(rho, ray_sum(*carrier));
  next = keep_maximal(std::move(next));
  std::vector<Cone> all;
  all.reserve(kept.size() + next.size());
  std::merge(kept.begin(), kept.end(), next.begin(), next.end(), std::back_inserter(all));
  return {Fan::from_sorted_maximal(std::move(all), fan.ambient_dim()), *carrier, regular};
}

Fan star_subdivision(const Fan& fan, const LatticeVector& rho) { return star_subdivide(fan, rho).fan; }

Fan inverse_star_subdivision(const Fan& fan, const LatticeVector& center, const Cone& carrier) {
  const int n = fan.ambient_dim();
  std::vector<Cone> next;
  for (const auto& c : fan.maximal_cones()) {
    if (!c.has_ray(center)) {
      next.push_back(c);
      continue;
    }
    std::vector<LatticeVector> r;
    for (const auto& v : c.rays())
      if (!same(v, center)) r.push_back(v);
    r.insert(r.end(), carrier.rays().begin(), carrier.rays().end());
    next.push_back(make_cone(r, n));
  }
  Fan coarse = Fan::from_maximal(std::move(next), n);
  auto sub = star_subdivide(coarse, center);
  if (!(sub.fan == fan) || !(sub.carrier == carrier))
    throw Error(ErrorCode::NotApplicable,
                "no fan subdivides to the given one at " + to_string(center));
  return coarse;
}

std::vector<Cone> triangulate(const Cone& sigma) {
  if (sigma.is_simplicial()) return {sigma};
  const LatticeVector& apex = sigma.rays().front();
  std::vector<Cone> out;
  for (const auto& f : facets(sigma)) {
    if (f.has_ray(apex)) continue;
    for (const auto& t : triangulate(f))
      out.push_back(cone_from_extreme_rays(with_ray(t.rays(), apex), sigma.ambient_dim()));
  }
  return out;
}

Fan pulling_triangulation(const Fan& fan) {
  std::vector<Cone> out;
  for (const auto& c : fan.maximal_cones()) {
    auto t = triangulate(c);
    out.insert(out.end(), t.begin(), t.end());
  }
  return Fan::from_maximal(std::move(out), fan.ambient_dim());
}

Rational normalized_volume(const Cone& piece, const Cone& sigma) {
  if (!piece.is_simplicial() || piece.dim() != sigma.dim())
    throw Error(ErrorCode::NotSimplicial, "volume needs a simplicial piece of full dimension");
  LatticeVector ell = LatticeVector::Zero(sigma.ambient_dim());
  for (const auto& f : sigma.facet_normals()) ell += f;
  IntegerMatrix m(sigma.dim(), sigma.dim());
  Rational denom = 1;
  for (int i = 0; i < sigma.dim(); ++i) {
    const auto& r = piece.rays()[static_cast<std::size_t>(i)];
    m.row(i) = sigma.local(r).transpose();
    denom *= Rational(dot(ell, r));
  }
  Rational d = abs(determinant(RationalMatrix(m.cast<Rational>())));
  return d / denom;
}

namespace {

Rational covered_volume(const Cone& sigma, const Fan& other) {
  Rational total = 0;
  for (const auto& tau : other.maximal_cones()) {
    Cone meet = intersect(sigma, tau);
    if (meet.dim() != sigma.dim()) continue;
    for (const auto& t : triangulate(meet)) total += normalized_volume(t, sigma);
  }
  return total;
}

Rational own_volume(const Cone& sigma) {
  Rational total = 0;
  for (const auto& t : triangulate(sigma)) total += normalized_volume(t, sigma);
  return total;
}

bool covered_by(const Fan& a, const Fan& b) {
  for (const auto& sigma : a.maximal_cones()) {
    if (sigma.is_zero()) continue;
    if (covered_volume(sigma, b) != own_volume(sigma)) return false;
  }
  return true;
}

}  // namespace

bool same_support(const Fan& a, const Fan& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return covered_by(a, b) && covered_by(b, a);
}

bool is_subdivision(const Fan& refined, const Fan& coarse) {
  if (refined.ambient_dim() != coarse.ambient_dim()) return false;
  const auto& big = coarse.maximal_cones();
  // Pieces of equal dimension inside a coarse cone have disjoint interiors,
  // so the cone is covered exactly when their volumes add up to its own.
  std::vector<Rational> filled(big.size());
  for (const auto& d : refined.maximal_cones()) {
    bool inside = false;
    for (std::size_t i = 0; i < big.size(); ++i) {
      if (!big[i].contains(d)) continue;
      inside = true;
      if (d.dim() == big[i].dim() && !d.is_zero())
        for (const auto& t : triangulate(d)) filled[i] += normalized_volume(t, big[i]);
    }
    if (!inside) return false;
  }
  for (std::size_t i = 0; i < big.size(); ++i)
    if (!big[i].is_zero() && filled[i] != own_volume(big[i])) return false;
  return true;
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "fan dimension");
  if (!same_support(a, b)) throw Error(ErrorCode::SupportMismatch, "fans have different supports");
  std::vector<Cone> cells;
  for (const auto& s : a.maximal_cones())
    for (const auto& t : b.maximal_cones()) cells.push_back(intersect(s, t));
  return Fan::from_maximal(std::move(cells), a.ambient_dim());
}

Fan product(const Fan& a, const Fan& b) {
  const int n1 = a.ambient_dim(), n2 = b.ambient_dim();
  std::vector<Cone> cells;
  for (const auto& s : a.maximal_cones()) {
    for (const auto& t : b.maximal_cones()) {
      std::vector<LatticeVector> r;
      for (const auto& v : s.rays()) {
        LatticeVector w = LatticeVector::Zero(n1 + n2);
        w.head(n1) = v;
        r.push_back(w);
      }
      for (const auto& v : t.rays()) {
        LatticeVector w = LatticeVector::Zero(n1 + n2);
        w.tail(n2) = v;
        r.push_back(w);
      }
      cells.push_back(cone_from_extreme_rays(std::move(r), n1 + n2));
    }
  }
  return Fan::from_maximal(std::move(cells), n1 + n2);
}

Fan join(const Fan& a, const Fan& b) {
  const int n = a.ambient_dim();
  if (b.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "fan dimension");
  auto ra = a.rays(), rb = b.rays();
  std::vector<LatticeVector> all = ra;
  all.insert(all.end(), rb.begin(), rb.end());
  if (rank(ra, n) + rank(rb, n) != rank(all, n))
    throw Error(ErrorCode::NotDirectSum, "spans of the fans meet nontrivially");
  std::vector<Cone> cells;
  for (const auto& s : a.maximal_cones()) {
    for (const auto& t : b.maximal_cones()) {
      std::vector<LatticeVector> r = s.rays();
      r.insert(r.end(), t.rays().begin(), t.rays().end());
      cells.push_back(cone_from_extreme_rays(std::move(r), n));
    }
  }
  return Fan::from_maximal(std::move(cells), n);
}

Fan restrict(const Fan& fan, const Cone& sigma) {
  if (!sigma.is_zero() && covered_volume(sigma, fan) != own_volume(sigma))
    throw Error(ErrorCode::NotCovered, to_string(sigma.rays()) + " is not inside the support");
  std::vector<Cone> cells;
  for (const auto& t : fan.maximal_cones()) {
    Cone meet = intersect(sigma, t);
    cells.push_back(meet);
  }
  return Fan::from_maximal(std::move(cells), fan.ambient_dim());
}

Cone locate(const Fan& fan, const LatticeVector& x) {
  for (const auto& c : fan.maximal_cones())
    if (c.contains(x)) return c.face_spanned({x});
  throw Error(ErrorCode::NotInSupport, to_string(x) + " is outside the support");
}

}  // namespace toric
