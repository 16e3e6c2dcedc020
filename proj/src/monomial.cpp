#include "toric/monomial.hpp"

#include <algorithm>
#include <map>

namespace toric {

MonomialIdeal::MonomialIdeal(const Cone& sigma, std::vector<LatticeVector> generators)
    : sigma_(sigma), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorCode::ParseError, "ideal needs a generator");
  for (const auto& m : generators_) {
    if (m.size() != sigma.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "exponent length");
    for (const auto& r : sigma.rays())
      if (dot(m, r) < 0)
        throw Error(ErrorCode::NotInCone, "exponent " + to_string(m) + " is negative on " + to_string(r));
  }
  sort_unique_lex(generators_);
}

OrdFunction::OrdFunction(std::vector<MonomialIdeal> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::ParseError, "ord function needs a factor");
  for (const auto& f : factors_)
    if (!(f.cone() == factors_.front().cone()))
      throw Error(ErrorCode::DimensionMismatch, "factors live on different cones");
}

OrdFunction operator*(const OrdFunction& a, const OrdFunction& b) {
  std::vector<MonomialIdeal> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return OrdFunction(std::move(all));
}

Integer ord_eval(const OrdFunction& f, const LatticeVector& u) {
  if (!f.cone().contains(u)) throw Error(ErrorCode::NotInCone, to_string(u) + " is outside the cone");
  Integer total = 0;
  for (const auto& ideal : f.factors()) {
    const auto& gens = ideal.generators();
    Integer best = dot(gens.front(), u);
    for (const auto& m : gens) best = std::min(best, dot(m, u));
    total += best;
  }
  return total;
}

namespace {

struct CellSearch {
  const OrdFunction& f;
  const Cone& sigma;
  std::vector<LatticeVector> equations;
  std::map<LatticeVector, LinearPiece, LexLess> by_form;

  void descend(std::size_t depth, std::vector<LatticeVector>& ineq, const LatticeVector& form) {
    Cone cell = cone_from_constraints(ineq, equations, sigma.ambient_dim());
    if (cell.dim() != sigma.dim()) return;
    if (depth == f.factors().size()) {
      LatticeVector key = sigma.lattice().basis * form;
      by_form.try_emplace(key, LinearPiece{cell, form});
      return;
    }
    const auto& gens = f.factors()[depth].generators();
    for (const auto& chosen : gens) {
      const std::size_t mark = ineq.size();
      for (const auto& other : gens)
        if (!same(other, chosen)) ineq.push_back(other - chosen);
      descend(depth + 1, ineq, form + chosen);
      ineq.resize(mark);
    }
  }
};

}  // namespace

LinearitySubdivision linearity_subdivision(const OrdFunction& f) {
  const Cone& sigma = f.cone();
  CellSearch search{f, sigma, {}, {}};
  const auto& eq = sigma.lattice().equations;
  for (Eigen::Index c = 0; c < eq.cols(); ++c) search.equations.emplace_back(eq.col(c));
  std::vector<LatticeVector> ineq = sigma.facet_normals();
  search.descend(0, ineq, LatticeVector::Zero(sigma.ambient_dim()));

  LinearitySubdivision out{Fan(sigma.ambient_dim()), {}};
  std::vector<Cone> cells;
  for (auto& [key, piece] : search.by_form) {
    cells.push_back(piece.cone);
    out.pieces.push_back(std::move(piece));
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const LinearPiece& a, const LinearPiece& b) { return a.cone < b.cone; });
  out.fan = Fan::from_maximal(std::move(cells), sigma.ambient_dim());
  return out;
}

Fan valuation_blowup(const Fan& fan, const LatticeVector& v) { return star_subdivision(fan, v); }

}  // namespace toric
