#include "toric/factorize.hpp"

#include "toric/io.hpp"
#include "toric/pidesing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

bool contains_rays(const Cone& big, const Cone& small) {
  return std::all_of(small.rays().begin(), small.rays().end(), [&](const auto& r) { return big.has_ray(r); });
}

bool has_maximal(const Fan& fan, const Cone& c) {
  return std::binary_search(fan.maximal_cones().begin(), fan.maximal_cones().end(), c);
}

struct CircuitData {
  std::vector<LatticeVector> plus, minus;  // projected rays by sign
  std::vector<Cone> lower, upper;          // images of maximal cones around the circuit minus one ray
};

CircuitData data_of(const Circuit& c, const Cobordism& b) {
  const Collapse& col = b.collapse();
  const NormalRelation& rel = c.relation;
  CircuitData d;
  for (std::size_t i = 0; i < rel.rays.size(); ++i) {
    if (abs(rel.coefficients[i]) != 1)
      throw Error(ErrorCode::NotPiNonsingular, "circuit " + to_string(c.cone.rays()) + " has a non-unit relation");
    (rel.coefficients[i] > 0 ? d.plus : d.minus).push_back(rel.projected[i]);
  }
  const int n = col.ambient_dim();
  for (const auto& delta : b.fan().maximal_cones()) {
    if (!contains_rays(delta, c.cone)) continue;
    for (std::size_t i = 0; i < rel.rays.size(); ++i) {
      std::vector<LatticeVector> rest;
      for (const auto& r : delta.rays())
        if (!same(r, rel.rays[i])) rest.push_back(r);
      Cone image = col.project(cone_from_extreme_rays(std::move(rest), n));
      (rel.coefficients[i] < 0 ? d.lower : d.upper).push_back(image);
    }
  }
  std::sort(d.lower.begin(), d.lower.end());
  std::sort(d.upper.begin(), d.upper.end());
  return d;
}

LatticeVector sum_of(const std::vector<LatticeVector>& vs, int dim) {
  LatticeVector s = LatticeVector::Zero(dim);
  for (const auto& v : vs) s += v;
  return s;
}

// The lower triangulation is in the fan and is the whole star of the positive side.
bool applicable(const Fan& fan, const CircuitData& d) {
  if (!std::all_of(d.lower.begin(), d.lower.end(), [&](const Cone& c) { return has_maximal(fan, c); })) return false;
  Cone positive = cone_from_extreme_rays(d.plus, fan.ambient_dim());
  std::vector<Cone> star;
  for (const auto& c : fan.maximal_cones())
    if (contains_rays(c, positive)) star.push_back(c);
  return star == d.lower;
}

ElementaryMove apply_move(const Fan& fan, const Circuit& circuit, const CircuitData& d) {
  const int n = fan.ambient_dim();
  ElementaryMove out{fan, {}};
  LatticeVector e = sum_of(d.plus, n);
  if (d.plus.size() >= 2) {
    Cone carrier = cone_from_extreme_rays(d.plus, n);
    auto sub = star_subdivide(fan, e);
    if (!sub.regular || !(sub.carrier == carrier))
      throw Error(ErrorCode::NotRegularStep, "blow-up at " + to_string(e) + " is not regular");
    out.steps.push_back(FactorizationStep{StepKind::BlowUp, e, carrier, digest(fan), digest(sub.fan), circuit.cone});
    out.fan = std::move(sub.fan);
  }
  if (d.minus.size() >= 2) {
    Cone carrier = cone_from_extreme_rays(d.minus, n);
    if (!carrier.is_regular() || !same(sum_of(d.minus, n), e))
      throw Error(ErrorCode::NotRegularStep, "blow-down to " + to_string(carrier.rays()) + " is not regular");
    Fan coarse = [&] {
      try {
        return inverse_star_subdivision(out.fan, e, carrier);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NotApplicable) throw;
        throw Error(ErrorCode::NotRegularStep, "blow-down at " + to_string(e) + ": " + err.detail());
      }
    }();
    out.steps.push_back(
        FactorizationStep{StepKind::BlowDown, e, carrier, digest(out.fan), digest(coarse), circuit.cone});
    out.fan = std::move(coarse);
  }
  for (const auto& c : d.upper)
    if (!has_maximal(out.fan, c))
      throw Error(ErrorCode::NotRegularStep, "upper triangulation of " + to_string(circuit.cone.rays()) + " missing");
  return out;
}

}  // namespace

std::vector<Circuit> collapse_order(const Cobordism& b) {
  if (!is_pi_nonsingular(b)) throw Error(ErrorCode::NotPiNonsingular, "factorization needs a pi-nonsingular cobordism");
  std::vector<Circuit> circuits = b.circuits();
  std::map<Cone, std::size_t> index;
  for (std::size_t i = 0; i < circuits.size(); ++i) index.emplace(circuits[i].cone, i);

  // A facet on the upper side of one dependent cone and the lower side of
  // another orders their circuits.
  const Collapse& col = b.collapse();
  const int n = col.ambient_dim();
  std::map<Cone, std::vector<std::pair<std::size_t, int>>> facets;
  for (const auto& delta : b.fan().maximal_cones()) {
    auto rel = classify(delta, col);
    if (!rel) continue;
    const std::size_t c = index.at(circuit_of(delta, col));
    for (std::size_t i = 0; i < rel->rays.size(); ++i) {
      if (rel->coefficients[i] == 0) continue;
      std::vector<LatticeVector> rest;
      for (const auto& r : delta.rays())
        if (!same(r, rel->rays[i])) rest.push_back(r);
      facets[cone_from_extreme_rays(std::move(rest), n)].push_back({c, rel->coefficients[i] > 0 ? 1 : -1});
    }
  }
  std::vector<std::set<std::size_t>> after(circuits.size());
  std::vector<std::size_t> indegree(circuits.size(), 0);
  for (const auto& [tau, sides] : facets)
    for (const auto& [c1, s1] : sides)
      for (const auto& [c2, s2] : sides)
        if (s1 > 0 && s2 < 0 && c1 != c2 && after[c1].insert(c2).second) ++indegree[c2];

  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < circuits.size(); ++i)
    if (indegree[i] == 0) ready.insert(i);
  std::vector<Circuit> order;
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(circuits[i]);
    for (std::size_t j : after[i])
      if (--indegree[j] == 0) ready.insert(j);
  }
  if (order.size() != circuits.size())
    throw Error(ErrorCode::NotCollapsible, "the circuits of the cobordism are cyclically ordered");
  return order;
}

ElementaryMove elementary_move(const Fan& fan, const Circuit& circuit, const Cobordism& b) {
  CircuitData d = data_of(circuit, b);
  if (!applicable(fan, d))
    throw Error(ErrorCode::NotApplicable,
                "lower triangulation of " + to_string(circuit.cone.rays()) + " is not a star of the fan");
  return apply_move(fan, circuit, d);
}

Factorization factorize(const Cobordism& b) {
  std::vector<Circuit> pending = collapse_order(b);
  std::vector<CircuitData> data;
  for (const auto& c : pending) data.push_back(data_of(c, b));

  Factorization f{b.projected_minus(), b.projected_plus(), {}, 0};
  Fan current = f.start;
  while (!pending.empty()) {
    // The first circuit in collapse order, or else the first applicable one.
    std::size_t k = 0;
    while (k < pending.size() && !applicable(current, data[k])) ++k;
    if (k == pending.size())
      throw Error(ErrorCode::NotCollapsible,
                  "no elementary move applies; " + std::to_string(pending.size()) + " circuits left");
    if (k > 0) ++f.out_of_order;
    ElementaryMove m = apply_move(current, pending[k], data[k]);
    current = std::move(m.fan);
    f.steps.insert(f.steps.end(), m.steps.begin(), m.steps.end());
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k));
    data.erase(data.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (!(current == f.end))
    throw Error(ErrorCode::VerificationFailure, "elementary moves do not end at the upper quotient fan");
  return f;
}

bool verify_factorization(const Factorization& f, std::vector<std::string>* trail) {
  auto fail = [&](const std::string& what) {
    if (trail) trail->push_back(what);
    return false;
  };
  Fan current = f.start;
  for (std::size_t k = 0; k < f.steps.size(); ++k) {
    const auto& s = f.steps[k];
    const std::string where = "step " + std::to_string(k) + " at " + to_string(s.center);
    if (digest(current) != s.before_digest) return fail(where + ": fan before does not match");
    try {
      if (!s.carrier.is_regular() || !same(s.center, [&] {
            LatticeVector e = LatticeVector::Zero(current.ambient_dim());
            for (const auto& r : s.carrier.rays()) e += r;
            return e;
          }()))
        return fail(where + ": center is not the sum of a regular cone");
      if (s.kind == StepKind::BlowUp) {
        auto sub = star_subdivide(current, s.center);
        if (!(sub.carrier == s.carrier)) return fail(where + ": carrier mismatch");
        current = std::move(sub.fan);
      } else {
        current = inverse_star_subdivision(current, s.center, s.carrier);
      }
    } catch (const Error& e) {
      return fail(where + ": " + e.what());
    }
    if (digest(current) != s.after_digest) return fail(where + ": fan after does not match");
  }
  if (!(current == f.end)) return fail("replay does not end at the upper quotient fan");
  return true;
}

}  // namespace toric
