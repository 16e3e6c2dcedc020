#include "toric/cone.hpp"
#include "toric/double_description.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

std::vector<LatticeVector> columns(const IntegerMatrix& m) {
  std::vector<LatticeVector> out;
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.emplace_back(m.col(c));
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const Eigen::Index d = m.rows();
  RationalMatrix aug(d, 2 * d);
  aug.leftCols(d) = m;
  aug.rightCols(d) = RationalMatrix::Identity(d, d);
  auto e = row_reduce(aug);
  return e.reduced.rightCols(d);
}

RationalMatrix to_rational(const IntegerMatrix& m) { return m.cast<Rational>(); }

}  // namespace

Cone::Cone(int ambient_dim) {
  auto d = std::make_shared<Data>();
  d->ambient_dim = ambient_dim;
  d->saturation = saturation({}, ambient_dim);
  data_ = std::move(d);
}

namespace {

struct Built {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> local_facets;
};

}  // namespace

static Built build_local(const std::vector<LatticeVector>& local_gens, int d, bool prune) {
  Built b;
  const auto k = static_cast<int>(local_gens.size());
  if (k == d) {
    RationalMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = Rational(local_gens[static_cast<std::size_t>(i)](j));
    RationalMatrix inv = inverse(m);
    for (int i = 0; i < d; ++i) b.local_facets.push_back(primitive_multiple(inv.col(i)));
    b.rays = local_gens;
    return b;
  }
  ConeGenerators dual = generators_of(local_gens, d);
  if (rank(dual.rays, d) < d)
    throw Error(ErrorCode::NotStrictlyConvex, "generators contain a line");
  b.local_facets = std::move(dual.rays);
  for (const auto& g : local_gens) {
    if (!prune) {
      b.rays.push_back(g);
      continue;
    }
    std::vector<LatticeVector> tight;
    for (const auto& f : b.local_facets)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank(tight, d) == d - 1) b.rays.push_back(g);
  }
  return b;
}

Cone make_cone(const std::vector<LatticeVector>& generators, int ambient_dim) {
  std::vector<LatticeVector> g;
  for (const auto& v : generators) {
    if (v.size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "generator length");
    if (is_zero(v)) continue;
    g.push_back(primitive(v));
  }
  sort_unique_lex(g);
  if (g.empty()) return Cone(ambient_dim);

  auto data = std::make_shared<Cone::Data>();
  data->ambient_dim = ambient_dim;
  data->saturation = saturation(g, ambient_dim);
  const int d = data->saturation.rank;
  std::vector<LatticeVector> local;
  for (const auto& v : g) local.emplace_back(data->saturation.to_local.transpose() * v);
  Built b = build_local(local, d, true);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::any_of(b.rays.begin(), b.rays.end(), [&](const auto& r) { return same(r, local[i]); }))
      data->rays.push_back(g[i]);
  for (const auto& f : b.local_facets) data->facets.emplace_back(data->saturation.to_local * f);
  if (static_cast<int>(data->rays.size()) == d) {
    IntegerMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.row(i) = (data->saturation.to_local.transpose() * data->rays[static_cast<std::size_t>(i)]).transpose();
    data->multiplicity = abs(numerator(determinant(to_rational(m))));
  } else {
    data->multiplicity = 0;
  }
  return Cone(std::shared_ptr<const Cone::Data>(std::move(data)));
}

Cone cone_from_extreme_rays(std::vector<LatticeVector> rays, int ambient_dim) {
  sort_unique_lex(rays);
  if (rays.empty()) return Cone(ambient_dim);
  auto data = std::make_shared<Cone::Data>();
  data->ambient_dim = ambient_dim;
  data->saturation = saturation(rays, ambient_dim);
  const int d = data->saturation.rank;
  std::vector<LatticeVector> local;
  for (const auto& v : rays) local.emplace_back(data->saturation.to_local.transpose() * v);
  Built b = build_local(local, d, false);
  for (const auto& f : b.local_facets) data->facets.emplace_back(data->saturation.to_local * f);
  if (static_cast<int>(rays.size()) == d) {
    IntegerMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.row(i) = local[static_cast<std::size_t>(i)].transpose();
    data->multiplicity = abs(numerator(determinant(to_rational(m))));
  } else {
    data->multiplicity = 0;
  }
  data->rays = std::move(rays);
  return Cone(std::shared_ptr<const Cone::Data>(std::move(data)));
}

Cone cone_from_constraints(const std::vector<LatticeVector>& inequalities,
                           const std::vector<LatticeVector>& equations, int ambient_dim) {
  ConeGenerators g = generators_of(inequalities, equations, ambient_dim);
  if (!g.lineality.empty()) throw Error(ErrorCode::NotStrictlyConvex, "constraints admit a line");
  return cone_from_extreme_rays(std::move(g.rays), ambient_dim);
}

LatticeVector Cone::local(const LatticeVector& x) const {
  return data_->saturation.to_local.transpose() * x;
}

LatticeVector Cone::ambient(const LatticeVector& y) const {
  return data_->saturation.basis.transpose() * y;
}

bool Cone::in_span(const LatticeVector& x) const {
  const auto& e = data_->saturation.equations;
  for (Eigen::Index c = 0; c < e.cols(); ++c)
    if (dot(LatticeVector(e.col(c)), x) != 0) return false;
  return true;
}

bool Cone::contains(const LatticeVector& x) const {
  if (!in_span(x)) return false;
  return std::all_of(data_->facets.begin(), data_->facets.end(),
                     [&](const auto& f) { return dot(f, x) >= 0; });
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.rays().begin(), other.rays().end(),
                     [&](const auto& r) { return contains(r); });
}

bool Cone::has_ray(const LatticeVector& r) const {
  return std::binary_search(data_->rays.begin(), data_->rays.end(), r, LexLess{});
}

Cone Cone::face_spanned(const std::vector<LatticeVector>& rays) const {
  std::vector<const LatticeVector*> tight;
  for (const auto& f : data_->facets)
    if (std::all_of(rays.begin(), rays.end(), [&](const auto& r) { return dot(f, r) == 0; }))
      tight.push_back(&f);
  std::vector<LatticeVector> out;
  for (const auto& r : data_->rays)
    if (std::all_of(tight.begin(), tight.end(), [&](const auto* f) { return dot(*f, r) == 0; }))
      out.push_back(r);
  if (out.size() == data_->rays.size()) return *this;
  return cone_from_extreme_rays(std::move(out), ambient_dim());
}

bool Cone::is_face(const Cone& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (const auto& r : other.rays())
    if (!has_ray(r)) return false;
  return face_spanned(other.rays()) == other;
}

RationalVector Cone::coefficients(const LatticeVector& x) const {
  if (!is_simplicial()) throw Error(ErrorCode::NotSimplicial, "coefficients need a simplicial cone");
  auto c = coordinates_in(data_->rays, toric::to_rational(x));
  if (!c) throw Error(ErrorCode::NotInCone, to_string(x) + " is not in the span");
  return *c;
}

Cone intersect(const Cone& a, const Cone& b) {
  std::vector<LatticeVector> ineq = a.facet_normals();
  ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<LatticeVector> eq = columns(a.lattice().equations);
  auto eb = columns(b.lattice().equations);
  eq.insert(eq.end(), eb.begin(), eb.end());
  return cone_from_constraints(ineq, eq, a.ambient_dim());
}

Cone cone_sum(const Cone& a, const Cone& b) {
  std::vector<LatticeVector> g = a.rays();
  g.insert(g.end(), b.rays().begin(), b.rays().end());
  return make_cone(g, a.ambient_dim());
}

Membership contains(const Cone& sigma, const LatticeVector& x) {
  if (!sigma.contains(x)) return {Position::Outside, std::nullopt};
  Cone f = sigma.face_spanned({x});
  return {f == sigma ? Position::RelativeInterior : Position::Boundary, f};
}

std::vector<Cone> faces(const Cone& sigma) {
  using Mask = std::vector<bool>;
  const auto& rays = sigma.rays();
  std::set<Mask> seen;
  std::vector<Mask> queue{Mask(rays.size(), true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Mask cur = queue[head];
    for (const auto& f : sigma.facet_normals()) {
      Mask next(rays.size(), false);
      bool changed = false;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (!cur[i]) continue;
        if (dot(f, rays[i]) == 0)
          next[i] = true;
        else
          changed = true;
      }
      if (changed && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Cone> out;
  for (const auto& m : queue) {
    std::vector<LatticeVector> r;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (m[i]) r.push_back(rays[i]);
    out.push_back(r.size() == rays.size() ? sigma : cone_from_extreme_rays(std::move(r), sigma.ambient_dim()));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  return out;
}

std::vector<Cone> facets(const Cone& sigma) {
  std::vector<Cone> out;
  for (const auto& f : sigma.facet_normals()) {
    std::vector<LatticeVector> r;
    for (const auto& v : sigma.rays())
      if (dot(f, v) == 0) r.push_back(v);
    out.push_back(cone_from_extreme_rays(std::move(r), sigma.ambient_dim()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParPoint> par_points(const Cone& sigma, const Integer& det_cap) {
  if (!sigma.is_simplicial()) throw Error(ErrorCode::NotSimplicial, "par needs a simplicial cone");
  if (sigma.multiplicity() > det_cap)
    throw Error(ErrorCode::DetTooLarge, "multiplicity " + sigma.multiplicity().str() + " exceeds cap");
  const int d = sigma.dim();
  if (d == 0) return {ParPoint{LatticeVector::Zero(sigma.ambient_dim()), RationalVector(0)}};
  IntegerMatrix l(d, d);
  for (int i = 0; i < d; ++i) l.row(i) = sigma.local(sigma.rays()[static_cast<std::size_t>(i)]).transpose();
  RationalMatrix linv = inverse(to_rational(l));
  IntegerMatrix lt = l.transpose();
  auto e = column_echelon(lt);
  std::vector<Integer> bound(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) bound[static_cast<std::size_t>(i)] = e.reduced(i, i);

  std::vector<ParPoint> out;
  LatticeVector c = LatticeVector::Zero(d);
  while (true) {
    RationalVector alpha = (to_rational(c).transpose() * linv).transpose();
    LatticeVector p = c;
    RationalVector frac(d);
    for (int i = 0; i < d; ++i) {
      Integer fl = floor_of(alpha(i));
      frac(i) = alpha(i) - Rational(fl);
      if (fl != 0) p -= LatticeVector(l.row(i).transpose()) * fl;
    }
    out.push_back({sigma.ambient(p), frac});
    int i = 0;
    for (; i < d; ++i) {
      c(i) += 1;
      if (c(i) < bound[static_cast<std::size_t>(i)]) break;
      c(i) = 0;
    }
    if (i == d) break;
  }
  std::sort(out.begin(), out.end(), [](const ParPoint& a, const ParPoint& b) {
    return lex_compare(a.point, b.point) < 0;
  });
  return out;
}

std::vector<LatticeVector> par(const Cone& sigma, const Integer& det_cap) {
  std::vector<LatticeVector> out;
  for (auto& p : par_points(sigma, det_cap)) out.push_back(std::move(p.point));
  return out;
}

std::vector<LatticeVector> par_closed(const Cone& sigma, const Integer& det_cap) {
  std::vector<LatticeVector> out;
  const auto& rays = sigma.rays();
  for (const auto& p : par_points(sigma, det_cap)) {
    std::vector<std::size_t> zero;
    for (Eigen::Index i = 0; i < p.alpha.size(); ++i)
      if (p.alpha(i) == 0) zero.push_back(static_cast<std::size_t>(i));
    for (std::size_t mask = 0; mask < (std::size_t{1} << zero.size()); ++mask) {
      LatticeVector q = p.point;
      for (std::size_t b = 0; b < zero.size(); ++b)
        if (mask & (std::size_t{1} << b)) q += rays[zero[b]];
      out.push_back(q);
    }
  }
  sort_unique_lex(out);
  return out;
}

namespace {

bool dominated(const RationalVector& a, const RationalVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

}  // namespace

std::vector<LatticeVector> minimal_internal_vectors(const Cone& sigma, const Integer& det_cap) {
  std::vector<ParPoint> cand;
  for (auto p : par_points(sigma, det_cap)) {
    for (Eigen::Index i = 0; i < p.alpha.size(); ++i) {
      if (p.alpha(i) != 0) continue;
      p.alpha(i) = 1;
      p.point += sigma.rays()[static_cast<std::size_t>(i)];
    }
    cand.push_back(std::move(p));
  }
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cand.size() && minimal; ++j)
      if (j != i && dominated(cand[j].alpha, cand[i].alpha)) minimal = false;
    if (minimal) out.push_back(cand[i].point);
  }
  sort_lex(out);
  return out;
}

std::vector<LatticeVector> minimal_generators(const Cone& sigma, const Integer& det_cap) {
  auto pts = par_points(sigma, det_cap);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (is_zero(pts[i].point)) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < pts.size() && minimal; ++j)
      if (j != i && !is_zero(pts[j].point) && dominated(pts[j].alpha, pts[i].alpha)) minimal = false;
    if (minimal) out.push_back(pts[i].point);
  }
  sort_lex(out);
  return out;
}

bool is_lattice_direct_sum(const Cone& sigma, const Cone& a, const Cone& b) {
  if (a.dim() + b.dim() != sigma.dim()) return false;
  std::vector<LatticeVector> both = a.rays();
  both.insert(both.end(), b.rays().begin(), b.rays().end());
  sort_lex(both);
  if (lex_compare(both, sigma.rays()) != 0) return false;
  const int d = sigma.dim();
  if (d == 0) return true;
  RationalMatrix m(d, d);
  int row = 0;
  for (const Cone* part : {&a, &b}) {
    const auto& basis = part->lattice().basis;
    for (Eigen::Index i = 0; i < basis.rows(); ++i, ++row) {
      LatticeVector y = sigma.local(LatticeVector(basis.row(i).transpose()));
      for (int j = 0; j < d; ++j) m(row, j) = Rational(y(j));
    }
  }
  return abs(determinant(m)) == 1;
}

std::pair<Cone, Cone> sing_split(const Cone& sigma) {
  Cone current = sigma;
  std::vector<LatticeVector> peeled;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& e : current.rays()) {
      std::vector<LatticeVector> others;
      for (const auto& r : current.rays())
        if (!same(r, e)) others.push_back(r);
      Cone rest = current.face_spanned(others);
      if (rest.rays().size() != others.size() || rest.dim() != current.dim() - 1) continue;
      Cone ray = cone_from_extreme_rays({e}, sigma.ambient_dim());
      if (!is_lattice_direct_sum(current, rest, ray)) continue;
      peeled.push_back(e);
      current = rest;
      progress = true;
      break;
    }
  }
  return {current, cone_from_extreme_rays(std::move(peeled), sigma.ambient_dim())};
}

}  // namespace toric
