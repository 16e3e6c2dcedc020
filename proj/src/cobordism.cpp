#include "toric/cobordism.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace toric {

Collapse::Collapse(const LatticeVector& v) {
  if (v.size() < 2) throw Error(ErrorCode::DimensionMismatch, "collapse vector needs ambient dimension >= 2");
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "collapse vector");
  v_ = primitive(v);
  const Eigen::Index n = v_.size() - 1;
  if (same(v_, unit_vector(static_cast<int>(v_.size()), static_cast<int>(n)))) {
    projection_ = IntegerMatrix::Zero(n, n + 1);
    projection_.leftCols(n) = IntegerMatrix::Identity(n, n);
    section_ = projection_.transpose();
    return;
  }
  IntegerMatrix row = v_.transpose();
  auto e = column_echelon(row);
  projection_ = e.transform.rightCols(n).transpose();
  section_ = e.inverse.bottomRows(n).transpose();
}

LatticeVector Collapse::project(const LatticeVector& x) const {
  if (x.size() != v_.size()) throw Error(ErrorCode::DimensionMismatch, "vector outside the cobordism lattice");
  return projection_ * x;
}

LatticeVector Collapse::lift(const LatticeVector& y) const {
  if (y.size() != v_.size() - 1) throw Error(ErrorCode::DimensionMismatch, "vector outside the quotient lattice");
  return section_ * y;
}

Cone Collapse::project(const Cone& sigma) const {
  std::vector<LatticeVector> images;
  for (const auto& r : sigma.rays()) {
    LatticeVector w = project(r);
    if (is_zero(w)) throw Error(ErrorCode::RayAlongCollapse, to_string(r) + " is parallel to the collapse vector");
    images.push_back(std::move(w));
  }
  try {
    return make_cone(images, quotient_dim());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotStrictlyConvex) throw;
    throw Error(ErrorCode::ImageNotStrictlyConvex, "image of " + to_string(sigma.rays()) + " contains a line");
  }
}

namespace {

std::vector<std::size_t> indices_where(const std::vector<Integer>& r, auto pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (pred(r[i])) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::size_t> NormalRelation::positive() const {
  return indices_where(coefficients, [](const Integer& x) { return x > 0; });
}

std::vector<std::size_t> NormalRelation::negative() const {
  return indices_where(coefficients, [](const Integer& x) { return x < 0; });
}

std::vector<std::size_t> NormalRelation::null() const {
  return indices_where(coefficients, [](const Integer& x) { return x == 0; });
}

std::vector<LatticeVector> NormalRelation::support() const {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (coefficients[i] != 0) out.push_back(rays[i]);
  return out;
}

NormalRelation normal_relation(const Cone& delta, const Collapse& collapse) {
  if (!collapse.is_dependent(delta))
    throw Error(ErrorCode::NotDependent, to_string(delta.rays()) + " does not span the collapse vector");
  if (!delta.is_simplicial()) throw Error(ErrorCode::NotSimplicial, to_string(delta.rays()));

  NormalRelation rel;
  rel.rays = delta.rays();
  for (const auto& r : rel.rays) {
    LatticeVector image = collapse.project(r);
    if (is_zero(image)) throw Error(ErrorCode::RayAlongCollapse, to_string(r) + " is parallel to the collapse vector");
    rel.contents.push_back(content(image));
    rel.projected.push_back(primitive(image));
  }

  const std::size_t k = rel.rays.size();
  LatticeVector p = unique_relation(rel.projected);
  std::size_t pivot = 0;
  while (p(static_cast<Eigen::Index>(pivot)) == 0) ++pivot;
  std::vector<LatticeVector> rest;
  for (std::size_t j = 0; j < k; ++j)
    if (j != pivot) rest.push_back(rel.projected[j]);
  const Integer face_det = det(rest);
  const Integer& lead = p(static_cast<Eigen::Index>(pivot));
  if (face_det % lead != 0)
    throw Error(ErrorCode::VerificationFailure, "relation scale is not integral for " + to_string(rel.rays));
  const Integer scale = face_det / abs(lead);

  RationalVector lifted = RationalVector::Zero(collapse.ambient_dim());
  for (std::size_t i = 0; i < k; ++i) {
    const Integer c = scale * p(static_cast<Eigen::Index>(i));
    rel.coefficients.push_back(c);
    lifted += to_rational(rel.rays[i]) * Rational(c, rel.contents[i]);
  }
  const auto& v = collapse.vector();
  Eigen::Index j = 0;
  while (v(j) == 0) ++j;
  rel.alpha = lifted(j) / Rational(v(j));
  if (rel.alpha < 0) {
    rel.alpha = -rel.alpha;
    for (auto& c : rel.coefficients) c = -c;
  }
  return rel;
}

std::optional<NormalRelation> classify(const Cone& delta, const Collapse& collapse) {
  if (!collapse.is_dependent(delta)) return std::nullopt;
  return normal_relation(delta, collapse);
}

Cone circuit_of(const Cone& delta, const Collapse& collapse) {
  if (!collapse.is_dependent(delta))
    throw Error(ErrorCode::NotDependent, to_string(delta.rays()) + " does not span the collapse vector");
  if (!delta.is_simplicial()) throw Error(ErrorCode::NotSimplicial, to_string(delta.rays()));
  RationalVector a = delta.coefficients(collapse.vector());
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < delta.rays().size(); ++i)
    if (a(static_cast<Eigen::Index>(i)) != 0) rays.push_back(delta.rays()[i]);
  return cone_from_extreme_rays(std::move(rays), delta.ambient_dim());
}

DefiniteFaces definite_faces(const Cone& delta, const Collapse& collapse) {
  NormalRelation rel = normal_relation(delta, collapse);
  const int n = delta.ambient_dim();
  auto omitting = [&](std::size_t i) {
    std::vector<LatticeVector> r;
    for (std::size_t j = 0; j < rel.rays.size(); ++j)
      if (j != i) r.push_back(rel.rays[j]);
    return cone_from_extreme_rays(std::move(r), n);
  };
  auto collect = [&](auto pred) {
    std::vector<LatticeVector> r;
    for (std::size_t j = 0; j < rel.rays.size(); ++j)
      if (pred(rel.coefficients[j])) r.push_back(rel.rays[j]);
    return cone_from_extreme_rays(std::move(r), n);
  };
  std::vector<Cone> lower, upper;
  for (std::size_t i : rel.negative()) lower.push_back(omitting(i));
  for (std::size_t i : rel.positive()) upper.push_back(omitting(i));
  return DefiniteFaces{Fan::from_maximal(std::move(lower), n), Fan::from_maximal(std::move(upper), n),
                       collect([](const Integer& c) { return c <= 0; }),
                       collect([](const Integer& c) { return c >= 0; })};
}

LatticeVector mid(const LatticeVector& w, const Cone& delta, const Collapse& collapse) {
  if (is_zero(w)) throw Error(ErrorCode::ZeroVector, "mid of the zero vector");
  std::vector<LatticeVector> images;
  for (const auto& r : delta.rays()) images.push_back(collapse.project(r));
  auto sol = combinations_of(images, to_rational(w));
  auto outside = [&] {
    return Error(ErrorCode::NotInProjection, to_string(w) + " is not in the image of " + to_string(delta.rays()));
  };
  if (!sol || sol->kernel.size() > 1) {
    if (sol) throw Error(ErrorCode::NotSimplicial, to_string(delta.rays()));
    throw outside();
  }
  const auto& c0 = sol->particular;
  auto lift_at = [&](const RationalVector& c) {
    RationalVector x = RationalVector::Zero(delta.ambient_dim());
    for (std::size_t i = 0; i < delta.rays().size(); ++i)
      x += to_rational(delta.rays()[i]) * c(static_cast<Eigen::Index>(i));
    return x;
  };

  if (sol->kernel.empty()) {
    for (Eigen::Index i = 0; i < c0.size(); ++i)
      if (c0(i) < 0) throw outside();
    return primitive_multiple(lift_at(c0));
  }

  // The fiber is c0 + t s; keep the parameter range where all coefficients are >= 0.
  const auto& s = sol->kernel.front();
  std::optional<Rational> lo, hi;
  for (Eigen::Index i = 0; i < c0.size(); ++i) {
    if (s(i) == 0) {
      if (c0(i) < 0) throw outside();
      continue;
    }
    Rational t = -c0(i) / s(i);
    if (s(i) > 0) {
      if (!lo || t > *lo) lo = t;
    } else if (!hi || t < *hi) {
      hi = t;
    }
  }
  if (!lo || !hi)
    throw Error(ErrorCode::ImageNotStrictlyConvex, "unbounded fiber over " + to_string(w));
  if (*lo > *hi) throw outside();
  RationalVector sum = lift_at(c0 + s * *lo) + lift_at(c0 + s * *hi);
  return primitive_multiple(sum);
}

LatticeVector ctr(const NormalRelation& relation, int sign) {
  if (relation.projected.empty()) throw Error(ErrorCode::NotDependent, "empty relation");
  LatticeVector out = LatticeVector::Zero(relation.projected.front().size());
  for (std::size_t i = 0; i < relation.coefficients.size(); ++i)
    if ((sign > 0 && relation.coefficients[i] > 0) || (sign < 0 && relation.coefficients[i] < 0))
      out += relation.projected[i];
  return out;
}

std::vector<Circuit> Cobordism::circuits() const {
  std::set<Cone> seen;
  for (const auto& gamma : fan_.maximal_cones()) {
    if (!collapse_.is_dependent(gamma)) continue;
    seen.insert(circuit_of(gamma, collapse_));
  }
  std::vector<Circuit> out;
  for (const auto& c : seen) out.push_back(Circuit{c, normal_relation(c, collapse_)});
  return out;
}

namespace {

struct Flags {
  bool enters_up = false;
  bool enters_down = false;
};

bool vanishes_on(const LatticeVector& f, const Cone& tau) {
  return std::all_of(tau.rays().begin(), tau.rays().end(), [&](const auto& r) { return dot(f, r) == 0; });
}

Fan boundary_fan(const std::map<Cone, Flags>& flags, bool up, const char* side, int n) {
  std::vector<Cone> members;
  for (const auto& [tau, f] : flags)
    if (!(up ? f.enters_up : f.enters_down)) members.push_back(tau);
  for (const auto& tau : members)
    for (const auto& face : facets(tau))
      if (!std::binary_search(members.begin(), members.end(), face))
        throw Error(ErrorCode::BoundaryNotFan, std::string(side) + " boundary is not closed under faces at " +
                                                   to_string(tau.rays()));
  return Fan::from_maximal(std::move(members), n);
}

Fan projected_boundary(const Fan& boundary, const Collapse& collapse, const char* side, bool check) {
  std::vector<Cone> images;
  std::set<Cone> distinct;
  std::size_t count = 0;
  for (const auto& tau : boundary.maximal_cones()) {
    Cone image = collapse.project(tau);
    if (image.dim() != tau.dim())
      throw Error(ErrorCode::BoundaryNotFan,
                  std::string(side) + " boundary cone " + to_string(tau.rays()) + " is not mapped injectively");
    images.push_back(image);
  }
  if (!check) return Fan::from_maximal(std::move(images), collapse.quotient_dim());
  for (const auto& tau : boundary.cones()) {
    ++count;
    distinct.insert(collapse.project(tau));
  }
  if (distinct.size() != count)
    throw Error(ErrorCode::BoundaryNotFan, std::string(side) + " boundary cones have overlapping images");
  try {
    return make_fan(images, collapse.quotient_dim());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAFan) throw;
    throw Error(ErrorCode::BoundaryNotFan, std::string(side) + " boundary image: " + e.detail());
  }
}

}  // namespace

Cobordism build_cobordism(Fan fan, const LatticeVector& v, bool check) {
  Collapse collapse(v);
  if (fan.ambient_dim() != collapse.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "collapse vector and fan dimensions differ");
  for (const auto& gamma : fan.maximal_cones()) collapse.project(gamma);

  // relint(tau) + eps v stays inside gamma exactly when v lies in lin(gamma)
  // and every facet functional of gamma vanishing on tau is >= 0 on v.
  std::map<Cone, Flags> flags;
  for (const auto& gamma : fan.maximal_cones()) {
    const bool dependent = collapse.is_dependent(gamma);
    for (const auto& tau : faces(gamma)) {
      Flags& f = flags[tau];
      if (!dependent) continue;
      bool up = true, down = true;
      for (const auto& normal : gamma.facet_normals()) {
        if (!vanishes_on(normal, tau)) continue;
        Integer s = dot(normal, collapse.vector());
        if (s < 0) up = false;
        if (s > 0) down = false;
      }
      f.enters_up = f.enters_up || up;
      f.enters_down = f.enters_down || down;
    }
  }

  const int n = fan.ambient_dim();
  Cobordism out(std::move(fan), collapse);
  out.minus_ = boundary_fan(flags, true, "lower", n);
  out.plus_ = boundary_fan(flags, false, "upper", n);
  out.projected_minus_ = projected_boundary(out.minus_, collapse, "lower", check);
  out.projected_plus_ = projected_boundary(out.plus_, collapse, "upper", check);
  return out;
}

Cobordism make_cobordism(Fan fan, const LatticeVector& v) { return build_cobordism(std::move(fan), v, true); }

Cobordism subdivided_cobordism(const Cobordism& b, Fan fan) {
  return build_cobordism(std::move(fan), b.collapse().vector(), false);
}

Cobordism make_cobordism(Fan fan) {
  const int n = fan.ambient_dim();
  return make_cobordism(std::move(fan), unit_vector(n, n - 1));
}

Cobordism single_cone_cobordism(const Cone& sigma) {
  return make_cobordism(Fan::from_maximal({sigma}, sigma.ambient_dim()));
}

namespace {

Cobordism random_instance(std::uint64_t seed, int dim, long long bound, bool stacked) {
  if (dim < 2) throw Error(ErrorCode::DimensionMismatch, "random cobordism needs dimension >= 2");
  if (bound < 1) throw Error(ErrorCode::DimensionMismatch, "random cobordism needs bound >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  };
  const LatticeVector v = unit_vector(dim, dim - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<LatticeVector> gens;
    for (int i = 0; i < dim; ++i) {
      LatticeVector g(dim);
      for (int j = 0; j < dim; ++j) g(j) = draw();
      gens.push_back(std::move(g));
    }
    if (rank(gens, dim) != dim) continue;
    try {
      Cone sigma = make_cone(gens, dim);
      if (sigma.contains(v) || sigma.contains(LatticeVector(-v))) continue;
      Fan fan = Fan::from_maximal({sigma}, dim);
      const auto extra = stacked ? rng() % static_cast<std::uint64_t>(dim) : 0;
      for (std::uint64_t s = 0; s < extra; ++s) {
        LatticeVector p = LatticeVector::Zero(dim);
        for (const auto& r : sigma.rays()) p += r * Integer(rng() % 3);
        if (is_zero(p)) continue;
        p = primitive(p);
        const auto& rays = fan.rays();
        if (std::any_of(rays.begin(), rays.end(), [&](const auto& r) { return same(r, p); })) continue;
        if (same(p, v) || same(p, LatticeVector(-v))) continue;
        fan = star_subdivision(fan, p);
      }
      return make_cobordism(std::move(fan), v);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::StepLimitExceeded, "no random cobordism found");
}

}  // namespace

Cobordism random_cobordism(std::uint64_t seed, int dim, long long bound) {
  return random_instance(seed, dim, bound, false);
}

Cobordism random_stacked_cobordism(std::uint64_t seed, int dim, long long bound) {
  return random_instance(seed, dim, bound, true);
}

}  // namespace toric
