#include "toric/pidesing.hpp"

#include "toric/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace toric {

std::string to_string(const DependentType& t) {
  static const char* families[] = {"I", "II", "III"};
  static const char* profiles[] = {"(n,n)", "(n,*)", "(*,n)", "(*,*)"};
  return std::string(families[static_cast<int>(t.family)]) + profiles[static_cast<int>(t.profile)];
}

namespace {

struct SideStats {
  Integer pos_max = 0, neg_max = 0;
  std::size_t pos_count = 0, neg_count = 0;
};

SideStats stats_of(const std::vector<Integer>& r, int sign = 1) {
  SideStats s;
  for (const auto& c0 : r) {
    Integer c = sign > 0 ? c0 : Integer(-c0);
    if (c > 0) {
      ++s.pos_count;
      s.pos_max = std::max(s.pos_max, c);
    } else if (c < 0) {
      ++s.neg_count;
      s.neg_max = std::max(s.neg_max, Integer(-c));
    }
  }
  return s;
}

Profile profile_of(bool first_at_n, bool second_at_n) {
  if (first_at_n && second_at_n) return Profile::NN;
  if (first_at_n) return Profile::NStar;
  if (second_at_n) return Profile::StarN;
  return Profile::StarStar;
}

}  // namespace

DependentType classify_type(const NormalRelation& relation, const Integer& n) {
  SideStats s = stats_of(relation.coefficients);
  if (s.pos_count == 0 || s.neg_count == 0)
    throw Error(ErrorCode::NotDependent, "relation without both signs for " + to_string(relation.rays));
  DependentType t;
  t.n = n;
  const bool pos_n = s.pos_max >= n, neg_n = s.neg_max >= n;
  if (s.pos_count == 1 && s.neg_count == 1) {
    t.family = Family::III;
    t.profile = (pos_n || neg_n) ? Profile::NN : Profile::StarStar;
  } else if (s.pos_count == 1 || s.neg_count == 1) {
    t.family = Family::I;
    // Pointing down has a single negative ray; the single side comes first.
    const bool down = s.neg_count == 1;
    t.profile = down ? profile_of(neg_n, pos_n) : profile_of(pos_n, neg_n);
  } else {
    t.family = Family::II;
    t.profile = (pos_n && neg_n) ? Profile::NN : (pos_n || neg_n) ? Profile::NStar : Profile::StarStar;
  }
  return t;
}

DependentType classify_type(const Cone& delta, const Collapse& collapse, const Integer& n) {
  return classify_type(normal_relation(delta, collapse), n);
}

Integer projected_multiplicity(const Cone& tau, const Collapse& collapse) {
  if (tau.is_zero()) return 1;
  std::vector<LatticeVector> images;
  for (const auto& r : tau.rays()) {
    LatticeVector w = collapse.project(r);
    if (is_zero(w)) throw Error(ErrorCode::RayAlongCollapse, to_string(r) + " is parallel to the collapse vector");
    images.push_back(primitive(w));
  }
  if (rank(images, collapse.quotient_dim()) != static_cast<int>(images.size()))
    throw Error(ErrorCode::DependentVectors, to_string(tau.rays()) + " is dependent");
  return det(images);
}

namespace {

Integer level_of(const Cone& gamma, const Collapse& collapse) {
  if (!collapse.is_dependent(gamma)) return projected_multiplicity(gamma, collapse);
  Integer m = 0;
  for (const auto& c : normal_relation(gamma, collapse).coefficients) m = std::max(m, Integer(abs(c)));
  return m;
}

}  // namespace

Integer max_projected_det(const Fan& fan, const Collapse& collapse) {
  Integer n = 1;
  for (const auto& gamma : fan.maximal_cones()) n = std::max(n, level_of(gamma, collapse));
  return n;
}

bool is_pi_nonsingular(const Fan& fan, const Collapse& collapse) { return max_projected_det(fan, collapse) == 1; }

bool is_pi_nonsingular(const Cobordism& b) { return is_pi_nonsingular(b.fan(), b.collapse()); }

namespace {

bool contains_rays(const Cone& big, const Cone& small) {
  return std::all_of(small.rays().begin(), small.rays().end(), [&](const auto& r) { return big.has_ray(r); });
}

// Sign making the side with the largest coefficient positive; on a tie the
// single side, if there is exactly one.
int codefinite_sign(const NormalRelation& rel) {
  SideStats s = stats_of(rel.coefficients);
  if (s.pos_max != s.neg_max) return s.pos_max > s.neg_max ? 1 : -1;
  if (s.pos_count == 1 && s.neg_count != 1) return 1;
  if (s.neg_count == 1 && s.pos_count != 1) return -1;
  return 1;
}

std::pair<Integer, std::size_t> invariant(const NormalRelation& rel, int sign) {
  std::pair<Integer, std::size_t> inv{0, 0};
  for (const auto& c0 : rel.coefficients) {
    Integer c = sign > 0 ? c0 : Integer(-c0);
    if (c <= 0) continue;
    if (c > inv.first) inv = {c, 0};
    if (c == inv.first) ++inv.second;
  }
  return inv;
}

bool codefinite(const NormalRelation& rel, const Cone& face) {
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < rel.rays.size(); ++i) {
    if (!face.has_ray(rel.rays[i])) continue;
    if (rel.coefficients[i] > 0) pos = true;
    if (rel.coefficients[i] < 0) neg = true;
  }
  return !(pos && neg);
}

Cone rays_with_sign(const NormalRelation& rel, int sign, int ambient_dim) {
  std::vector<LatticeVector> r;
  for (std::size_t i = 0; i < rel.rays.size(); ++i)
    if (sign * rel.coefficients[i] >= 0) r.push_back(rel.rays[i]);
  return cone_from_extreme_rays(std::move(r), ambient_dim);
}

struct ParCenter {
  LatticeVector center;
  LatticeVector witness;
  Cone face;
};

class Driver {
public:
  Driver(const Cobordism& b, const PiDesingOptions& options)
      : fan_(b.fan()), collapse_(b.collapse()), options_(options) {
    refresh();
  }

  void run() {
    while (true) {
      Integer n = level();
      if (n <= 1) return;
      audit_.levels.push_back(n);
      for (std::size_t pass = 0; level() == n; ++pass) {
        if (pass > 0) ++audit_.level_repeats;
        const std::size_t before = certificate_.centers.size();
        run_steps(n);
        if (certificate_.centers.size() == before)
          throw Error(ErrorCode::VerificationFailure, "no step applies at level " + n.str());
      }
    }
  }

  const Fan& fan() const { return fan_; }
  PiDesingCertificate& certificate() { return certificate_; }
  PiDesingAudit& audit() { return audit_; }

private:
  struct Info {
    std::optional<NormalRelation> relation;
    Integer level;
  };

  const Info& info(const Cone& gamma) {
    auto it = cache_.find(gamma);
    if (it != cache_.end()) return it->second;
    Info i;
    i.relation = classify(gamma, collapse_);
    if (i.relation) {
      i.level = 0;
      for (const auto& c : i.relation->coefficients) i.level = std::max(i.level, Integer(abs(c)));
    } else {
      i.level = projected_multiplicity(gamma, collapse_);
    }
    return cache_.emplace(gamma, std::move(i)).first->second;
  }

  // Info of the maximal cones, in the order of fan_.maximal_cones().
  // Both cone lists are sorted, so surviving cones are matched by a merge.
  void refresh(const std::vector<Cone>& old_cones = {}) {
    std::vector<const Info*> next;
    std::size_t j = 0;
    for (const auto& gamma : fan_.maximal_cones()) {
      while (j < old_cones.size() && old_cones[j] < gamma) ++j;
      next.push_back(j < old_cones.size() && old_cones[j] == gamma ? infos_[j] : &info(gamma));
    }
    infos_ = std::move(next);
  }

  Integer level() const {
    Integer n = 1;
    for (const Info* i : infos_) n = std::max(n, i->level);
    return n;
  }

  template <class Pred>
  std::optional<Cone> first_dependent(Pred pred) const {
    const auto& cones = fan_.maximal_cones();
    for (std::size_t k = 0; k < cones.size(); ++k)
      if (infos_[k]->relation && pred(*infos_[k]->relation)) return cones[k];
    return std::nullopt;
  }

  std::optional<Cone> first_of_type(const Integer& n, std::initializer_list<std::pair<Family, Profile>> types) {
    return first_dependent([&](const NormalRelation& rel) {
      DependentType t = classify_type(rel, n);
      return std::any_of(types.begin(), types.end(),
                         [&](const auto& ft) { return t.family == ft.first && t.profile == ft.second; });
    });
  }

  void subdivide(CenterRecord rec, int step) {
    if (certificate_.centers.size() >= options_.max_steps)
      throw Error(ErrorCode::StepLimitExceeded, std::to_string(options_.max_steps) + " star subdivisions");
    Fan old = std::exchange(fan_, star_subdivision(fan_, rec.center));
    refresh(old.maximal_cones());
    ++audit_.step_counts[step - 1];
    certificate_.centers.push_back(std::move(rec));
  }

  LatticeVector subdivide_ctr(const Cone& delta, int sign, const char* label, int step) {
    Cone circuit = circuit_of(delta, collapse_);
    NormalRelation rel = normal_relation(circuit, collapse_);
    LatticeVector witness = ctr(rel, sign);
    LatticeVector center = mid(witness, circuit, collapse_);
    subdivide(CenterRecord{center, CenterKind::MidCtr, circuit, witness, sign, label}, step);
    return center;
  }

  ParCenter par_center(const Cone& tau) {
    auto pts = par(collapse_.project(tau), options_.det_cap);
    auto it = std::find_if(pts.begin(), pts.end(), [](const auto& p) { return !is_zero(p); });
    if (it == pts.end())
      throw Error(ErrorCode::VerificationFailure, "no parallelepiped point over " + to_string(tau.rays()));
    LatticeVector center = mid(*it, tau, collapse_);
    auto m = contains(tau, center);
    return ParCenter{center, *it, *m.face};
  }

  // Subdivides at mid(ctr) of every dependent cone around face for which the
  // face is not codefinite, until none is left.
  void make_codefinite(const Cone& face, const char* label, int step) {
    while (true) {
      std::optional<Cone> delta;
      for (std::size_t k = 0; k < infos_.size() && !delta; ++k) {
        const Cone& gamma = fan_.maximal_cones()[k];
        if (infos_[k]->relation && contains_rays(gamma, face) && !codefinite(*infos_[k]->relation, face))
          delta = gamma;
      }
      if (!delta) return;
      NormalRelation rel = *info(*delta).relation;
      const int sign = codefinite_sign(rel);
      const auto inv = invariant(rel, sign);
      LatticeVector center = subdivide_ctr(*delta, sign, label, step);
      for (std::size_t k = 0; k < infos_.size(); ++k) {
        const Cone& gamma = fan_.maximal_cones()[k];
        if (!gamma.has_ray(center) || !contains_rays(gamma, face)) continue;
        const Info& i = *infos_[k];
        if (!i.relation || codefinite(*i.relation, face)) continue;
        if (!(invariant(*i.relation, codefinite_sign(*i.relation)) < inv)) ++audit_.invariant_violations;
      }
    }
  }

  void eliminate_over(const Cone& tau, const char* label_a, const char* label_b, int step) {
    ParCenter pc = par_center(tau);
    make_codefinite(pc.face, label_a, step);
    subdivide(CenterRecord{pc.center, CenterKind::MidPar, tau, pc.witness, 0, label_b}, step);
  }

  void run_steps(const Integer& n) {
    while (auto delta = first_of_type(n, {{Family::II, Profile::NN}}))
      subdivide_ctr(*delta, 1, "1", 1);

    while (auto delta = first_of_type(n, {{Family::I, Profile::NN}})) {
      NormalRelation rel = *info(*delta).relation;
      const int sign = stats_of(rel.coefficients).neg_count == 1 ? 1 : -1;
      eliminate_over(rays_with_sign(rel, sign, delta->ambient_dim()), "2a", "2b", 2);
    }

    while (auto delta = first_of_type(n, {{Family::I, Profile::StarN}, {Family::II, Profile::NStar}})) {
      SideStats s = stats_of(info(*delta).relation->coefficients);
      subdivide_ctr(*delta, s.pos_max >= n ? 1 : -1, "3", 3);
    }

    while (auto delta = first_of_type(n, {{Family::III, Profile::NN}})) {
      NormalRelation rel = *info(*delta).relation;
      eliminate_over(rays_with_sign(rel, 1, delta->ambient_dim()), "4a", "4b", 4);
    }

    while (true) {
      std::optional<Cone> target;
      for (std::size_t k = 0; k < infos_.size(); ++k) {
        const Cone& gamma = fan_.maximal_cones()[k];
        const Info& i = *infos_[k];
        if (i.relation) {
          DependentType t = classify_type(*i.relation, n);
          if (t.family == Family::I && t.profile == Profile::NStar) {
            const int sign = stats_of(i.relation->coefficients).neg_count == 1 ? 1 : -1;
            target = rays_with_sign(*i.relation, sign, gamma.ambient_dim());
            break;
          }
        } else if (i.level == n) {
          target = gamma;
          break;
        }
      }
      if (!target) break;
      eliminate_over(*target, "5a", "5b", 5);
    }
  }

  Fan fan_;
  Collapse collapse_;
  PiDesingOptions options_;
  std::map<Cone, Info> cache_;
  std::vector<const Info*> infos_;
  PiDesingCertificate certificate_;
  PiDesingAudit audit_;
};

[[noreturn]] void verification_failure(const std::string& what) {
  throw Error(ErrorCode::VerificationFailure, what);
}

}  // namespace

PiDesingResult pi_desingularize(const Cobordism& b, const PiDesingOptions& options) {
  if (!b.fan().is_simplicial()) throw Error(ErrorCode::NotSimplicial, "pi-desingularization needs a simplicial cobordism");
  Driver d(b, options);
  d.run();
  Cobordism out = subdivided_cobordism(b, d.fan());
  d.certificate().initial_digest = digest(b);
  d.certificate().final_digest = digest(out);
  return PiDesingResult{std::move(out), std::move(d.certificate()), std::move(d.audit())};
}

Fan verify_pi_desingularization(const Cobordism& b, const PiDesingCertificate& certificate) {
  if (digest(b) != certificate.initial_digest) verification_failure("initial digest mismatch");
  const Collapse& col = b.collapse();
  Fan fan = b.fan();
  for (std::size_t k = 0; k < certificate.centers.size(); ++k) {
    const auto& rec = certificate.centers[k];
    const std::string where = "center " + std::to_string(k) + " " + to_string(rec.center);
    if (!fan.has_cone(rec.cone)) verification_failure(where + ": witness cone is not in the fan");
    if (rec.kind == CenterKind::MidPar) {
      if (col.is_dependent(rec.cone)) verification_failure(where + ": witness cone is dependent");
      Cone image = col.project(rec.cone);
      auto coords = coordinates_in(image.rays(), to_rational(rec.witness));
      if (!coords || is_zero(rec.witness)) verification_failure(where + ": witness outside the image");
      for (Eigen::Index i = 0; i < coords->size(); ++i)
        if ((*coords)(i) < 0 || (*coords)(i) >= 1) verification_failure(where + ": witness not in par");
    } else {
      if (!col.is_dependent(rec.cone) || !(circuit_of(rec.cone, col) == rec.cone))
        verification_failure(where + ": witness cone is not a circuit");
      if (rec.sign != 1 && rec.sign != -1) verification_failure(where + ": bad sign");
      if (!same(ctr(normal_relation(rec.cone, col), rec.sign), rec.witness))
        verification_failure(where + ": witness is not the circuit center");
    }
    if (!same(mid(rec.witness, rec.cone, col), rec.center)) verification_failure(where + ": center is not mid");
    fan = star_subdivision(fan, rec.center);
  }
  if (!is_pi_nonsingular(fan, col)) verification_failure("result is not pi-nonsingular");
  if (digest(subdivided_cobordism(b, fan)) != certificate.final_digest) verification_failure("final digest mismatch");
  return fan;
}

namespace {

bool proportional(const std::vector<Rational>& a, const std::vector<Integer>& b) {
  bool nonzero = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (b[i] != 0) nonzero = true;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * Rational(b[j]) != a[j] * Rational(b[i])) return false;
  }
  return nonzero;
}

}  // namespace

bool check_relation_update(const Cone& delta, const LatticeVector& center, const Cone& child,
                           const Collapse& collapse) {
  NormalRelation rel = normal_relation(delta, collapse);
  auto not_applicable = [&](const std::string& why) {
    return Error(ErrorCode::CaseNotApplicable, to_string(center) + " over " + to_string(delta.rays()) + ": " + why);
  };
  auto m = contains(delta, center);
  if (m.position == Position::Outside || !m.face) throw not_applicable("center outside the cone");
  const Cone carrier = *m.face;
  if (!child.has_ray(center)) throw not_applicable("child does not contain the center");

  // The child replaces exactly one ray i0 of the carrier by the center.
  std::optional<std::size_t> i0;
  for (std::size_t i = 0; i < rel.rays.size(); ++i) {
    if (child.has_ray(rel.rays[i])) continue;
    if (i0 || !carrier.has_ray(rel.rays[i])) throw not_applicable("child is not a cone of the star subdivision");
    i0 = i;
  }
  if (!i0 || child.rays().size() != rel.rays.size()) throw not_applicable("child is not a cone of the star subdivision");

  NormalRelation actual = normal_relation(child, collapse);
  const std::size_t k = rel.rays.size();
  auto slot = [&](const LatticeVector& ray) {
    for (std::size_t j = 0; j < actual.rays.size(); ++j)
      if (same(actual.rays[j], ray)) return j;
    throw not_applicable("ray missing from child");
  };
  const std::size_t center_slot = slot(center);

  auto matches = [&](const std::vector<Rational>& coeff_by_old, const Rational& on_center, const Integer& expect_center) {
    std::vector<Rational> predicted(actual.rays.size(), Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      if (i != *i0) predicted[slot(rel.rays[i])] = coeff_by_old[i];
    predicted[center_slot] = on_center;
    return proportional(predicted, actual.coefficients) && abs(actual.coefficients[center_slot]) == abs(expect_center);
  };

  if (collapse.is_dependent(carrier)) {
    if (!(circuit_of(delta, collapse) == carrier)) throw not_applicable("carrier is not the circuit");
    bool any = false, ok = true;
    for (int sign : {1, -1}) {
      LatticeVector c = ctr(rel, sign);
      if (!same(mid(c, delta, collapse), center)) continue;
      any = true;
      const Integer m_w = content(c);
      std::vector<Rational> r(k);
      for (std::size_t i = 0; i < k; ++i) r[i] = Rational(sign * rel.coefficients[i]);
      const Rational r0 = r[*i0];
      std::vector<Rational> coeff(k, Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        if (i == *i0) continue;
        if (r0 > 0) {
          if (r[i] > 0) coeff[i] = (r[i] - r0) / Rational(m_w);
          if (r[i] < 0) coeff[i] = r[i] / Rational(m_w);
        } else if (r[i] > 0) {
          coeff[i] = -r0 / Rational(m_w);
        }
      }
      ok = ok && matches(coeff, r0, rel.coefficients[*i0]);
    }
    if (!any) throw not_applicable("center is not mid of a circuit center");
    return ok;
  }

  if (!codefinite(rel, carrier)) throw not_applicable("carrier is not codefinite");
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i)
    if (carrier.has_ray(rel.rays[i]) && rel.coefficients[i] < 0) sign = -1;
  std::vector<LatticeVector> face_w;
  std::vector<std::size_t> face_idx;
  for (std::size_t i = 0; i < k; ++i) {
    if (!carrier.has_ray(rel.rays[i])) continue;
    face_w.push_back(rel.projected[i]);
    face_idx.push_back(i);
  }
  auto alpha_face = coordinates_in(face_w, to_rational(collapse.project(center)));
  if (!alpha_face) throw not_applicable("center does not project into the carrier image");
  std::vector<Rational> alpha(k, Rational(0));
  for (std::size_t j = 0; j < face_idx.size(); ++j) alpha[face_idx[j]] = (*alpha_face)(static_cast<Eigen::Index>(j));

  std::vector<Rational> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = Rational(sign * rel.coefficients[i]);
  const Rational r0 = r[*i0], a0 = alpha[*i0];
  std::vector<Rational> coeff(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (i == *i0) continue;
    coeff[i] = a0 * r[i] - (carrier.has_ray(rel.rays[i]) ? alpha[i] * r0 : Rational(0));
  }
  // The formula uses w = pi(center) = content * prim(pi(center)).
  const Rational on_center = r0 * Rational(content(collapse.project(center)));
  return matches(coeff, on_center, rel.coefficients[*i0]);
}

}  // namespace toric
