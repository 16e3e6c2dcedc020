#pragma once

#include "toric/arith.hpp"
#include "toric/error.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

namespace detail {

template <class Int>
Int abs_of(const Int& a) {
  return a < 0 ? Int(-a) : a;
}

template <class Int>
Int floor_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class Int>
struct Bezout {
  Int g, s, t;
};

// s*a + t*b = g with g >= 0
template <class Int>
Bezout<Int> bezout(const Int& a, const Int& b) {
  if (a != 0 && b % a == 0) return {abs_of(a), Int(a < 0 ? -1 : 1), Int(0)};
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    Int t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0 < 0) return {Int(-r0), Int(-s0), Int(-t0)};
  return {r0, s0, t0};
}

template <class Scalar>
void mix_columns(Matrix<Scalar>& m, Eigen::Index c, Eigen::Index j, const Scalar& a11,
                 const Scalar& a21, const Scalar& a12, const Scalar& a22) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Scalar x = m(r, c), y = m(r, j);
    m(r, c) = a11 * x + a21 * y;
    m(r, j) = a12 * x + a22 * y;
  }
}

template <class Scalar>
void mix_rows(Matrix<Scalar>& m, Eigen::Index c, Eigen::Index j, const Scalar& a11,
              const Scalar& a12, const Scalar& a21, const Scalar& a22) {
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    Scalar x = m(c, k), y = m(j, k);
    m(c, k) = a11 * x + a12 * y;
    m(j, k) = a21 * x + a22 * y;
  }
}

}  // namespace detail

// m * transform == reduced, transform unimodular with inverse tracked.
// Nonzero columns of `reduced` are the first rank() ones; column c has its
// leading entry at row pivot_rows[c], positive, and entries to its left in
// that row are reduced modulo the pivot.
template <class Int>
struct ColumnEchelon {
  Matrix<Int> reduced;
  Matrix<Int> transform;
  Matrix<Int> inverse;
  std::vector<Eigen::Index> pivot_rows;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_rows.size()); }
};

template <class Int>
ColumnEchelon<Int> column_echelon(const Matrix<Int>& m) {
  using Eigen::Index;
  const Index rows = m.rows(), cols = m.cols();
  ColumnEchelon<Int> e{m, Matrix<Int>::Identity(cols, cols), Matrix<Int>::Identity(cols, cols), {}};
  auto& h = e.reduced;
  auto& u = e.transform;
  auto& ui = e.inverse;
  Index c = 0;
  for (Index i = 0; i < rows && c < cols; ++i) {
    for (Index j = c + 1; j < cols; ++j) {
      if (h(i, j) == 0) continue;
      auto [g, s, t] = detail::bezout(h(i, c), h(i, j));
      Int a = h(i, c) / g, b = h(i, j) / g;
      Int nb = -b;
      detail::mix_columns(h, c, j, s, t, nb, a);
      detail::mix_columns(u, c, j, s, t, nb, a);
      Int nt = -t;
      detail::mix_rows(ui, c, j, a, b, nt, s);
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      h.col(c) = -h.col(c);
      u.col(c) = -u.col(c);
      ui.row(c) = -ui.row(c);
    }
    for (Index k = 0; k < c; ++k) {
      Int q = detail::floor_quotient(h(i, k), h(i, c));
      if (q == 0) continue;
      h.col(k) -= h.col(c) * q;
      u.col(k) -= u.col(c) * q;
      ui.row(c) += ui.row(k) * q;
    }
    e.pivot_rows.push_back(i);
    ++c;
  }
  return e;
}

template <class Int>
Matrix<Int> stack_rows(const std::vector<Vector<Int>>& vs, Eigen::Index cols) {
  Matrix<Int> m(static_cast<Eigen::Index>(vs.size()), cols);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "vector length differs");
    m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  }
  return m;
}

// Basis (as rows) of the integer relations {c : c^T m == 0}.
template <class Int>
Matrix<Int> left_kernel(const Matrix<Int>& m) {
  Matrix<Int> t = m.transpose();
  auto e = column_echelon(t);
  const Eigen::Index r = e.rank();
  return e.transform.rightCols(m.rows() - r).transpose();
}

// Index of the lattice spanned by independent rows inside its saturation.
template <class Int>
Int lattice_index(const Matrix<Int>& rows) {
  auto e = column_echelon(rows);
  if (e.rank() != rows.rows()) throw Error(ErrorCode::DependentVectors, "vectors are dependent");
  Int d = 1;
  for (Eigen::Index c = 0; c < e.rank(); ++c) d *= e.reduced(e.pivot_rows[c], c);
  return d;
}

template <class Field>
struct RowEchelon {
  Matrix<Field> reduced;
  std::vector<Eigen::Index> pivot_cols;
};

template <class Field>
RowEchelon<Field> row_reduce(Matrix<Field> m) {
  using Eigen::Index;
  RowEchelon<Field> out;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Field inv = Field(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Field f = m(i, c);
      m.row(i) -= m.row(r) * f;
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Field>
struct AffineSolution {
  Vector<Field> particular;
  std::vector<Vector<Field>> kernel;
};

// All solutions of a * x == b.
template <class Field>
std::optional<AffineSolution<Field>> solve_affine(const Matrix<Field>& a, const Vector<Field>& b) {
  using Eigen::Index;
  Matrix<Field> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto e = row_reduce(aug);
  for (Index c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  AffineSolution<Field> sol;
  sol.particular = Vector<Field>::Zero(a.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    Index c = e.pivot_cols[i];
    is_pivot[static_cast<std::size_t>(c)] = true;
    sol.particular(c) = e.reduced(static_cast<Index>(i), a.cols());
  }
  for (Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<Field> k = Vector<Field>::Zero(a.cols());
    k(f) = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      k(e.pivot_cols[i]) = -e.reduced(static_cast<Index>(i), f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

template <class Field>
Field determinant(Matrix<Field> m) {
  using Eigen::Index;
  Field d = 1;
  for (Index c = 0; c < m.cols(); ++c) {
    Index p = c;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) return Field(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      d = -d;
    }
    d *= m(c, c);
    for (Index i = c + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Field f = m(i, c) / m(c, c);
      m.row(i) -= m.row(c) * f;
    }
  }
  return d;
}

// Lattice-level operations on Integer vectors.

LatticeVector primitive(const LatticeVector& v);

int rank(const std::vector<LatticeVector>& vs, int dim);

// |det| of the lattice spanned by vs inside N intersected with their span.
Integer det(const std::vector<LatticeVector>& vs);

// The relation c with sum c_i v_i == 0, gcd 1, first nonzero entry positive.
LatticeVector unique_relation(const std::vector<LatticeVector>& vs);

// Coordinates for N ∩ span(vs): local = x^T * to_local, x^T = local^T * basis,
// and x lies in the span iff x^T * equations == 0.
struct Saturation {
  IntegerMatrix to_local;
  IntegerMatrix basis;
  IntegerMatrix equations;
  int rank = 0;
};

Saturation saturation(const std::vector<LatticeVector>& vs, int dim);

// Rational coefficients c with sum c_i vs[i] == x for independent vs.
std::optional<RationalVector> coordinates_in(const std::vector<LatticeVector>& vs,
                                             const RationalVector& x);

std::optional<AffineSolution<Rational>> combinations_of(const std::vector<LatticeVector>& vs,
                                                       const RationalVector& x);

}  // namespace toric
