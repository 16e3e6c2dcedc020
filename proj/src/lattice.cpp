#include "toric/lattice.hpp"

namespace toric {

LatticeVector primitive(const LatticeVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive of the zero vector");
  if (g == 1) return v;
  LatticeVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

int rank(const std::vector<LatticeVector>& vs, int dim) {
  if (vs.empty()) return 0;
  return static_cast<int>(column_echelon(stack_rows(vs, dim)).rank());
}

Integer det(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return 1;
  return lattice_index(stack_rows(vs, vs.front().size()));
}

LatticeVector unique_relation(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) throw Error(ErrorCode::NotCircuitLike, "no vectors");
  IntegerMatrix k = left_kernel(stack_rows(vs, vs.front().size()));
  if (k.rows() != 1)
    throw Error(ErrorCode::NotCircuitLike,
                "relation space has dimension " + std::to_string(k.rows()));
  LatticeVector r = primitive(LatticeVector(k.row(0).transpose()));
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r(i) == 0) continue;
    if (r(i) < 0) r = -r;
    break;
  }
  return r;
}

Saturation saturation(const std::vector<LatticeVector>& vs, int dim) {
  Saturation s;
  if (vs.empty()) {
    s.to_local = IntegerMatrix(dim, 0);
    s.basis = IntegerMatrix(0, dim);
    s.equations = IntegerMatrix::Identity(dim, dim);
    return s;
  }
  auto e = column_echelon(stack_rows(vs, dim));
  const Eigen::Index r = e.rank();
  s.rank = static_cast<int>(r);
  s.to_local = e.transform.leftCols(r);
  s.basis = e.inverse.topRows(r);
  s.equations = e.transform.rightCols(dim - r);
  return s;
}

namespace {

RationalMatrix columns_of(const std::vector<LatticeVector>& vs, Eigen::Index dim) {
  RationalMatrix a(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (Eigen::Index i = 0; i < dim; ++i) a(i, static_cast<Eigen::Index>(j)) = Rational(vs[j](i));
  return a;
}

}  // namespace

std::optional<RationalVector> coordinates_in(const std::vector<LatticeVector>& vs,
                                             const RationalVector& x) {
  auto sol = combinations_of(vs, x);
  if (!sol) return std::nullopt;
  if (!sol->kernel.empty()) throw Error(ErrorCode::DependentVectors, "coordinates not unique");
  return sol->particular;
}

std::optional<AffineSolution<Rational>> combinations_of(const std::vector<LatticeVector>& vs,
                                                       const RationalVector& x) {
  if (vs.empty()) {
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) != 0) return std::nullopt;
    return AffineSolution<Rational>{RationalVector(0), {}};
  }
  return solve_affine(columns_of(vs, x.size()), x);
}

}  // namespace toric
