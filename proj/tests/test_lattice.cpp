#include "doctest.h"
#include "oracles.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

bool proportional(const LatticeVector& a, const std::vector<Integer>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < a.size(); ++j)
      if (a(i) * b[static_cast<std::size_t>(j)] != a(j) * b[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

TEST_CASE("primitive divides out the content") {
  CHECK(same(primitive(lattice_vector({4, -6, 2})), lattice_vector({2, -3, 1})));
  CHECK(same(primitive(lattice_vector({0, 5})), lattice_vector({0, 1})));
  CHECK_THROWS_AS(primitive(lattice_vector({0, 0})), Error);
  try {
    primitive(lattice_vector({0, 0, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("det of a partial lattice basis") {
  CHECK(det({lattice_vector({1, 0, 1}), lattice_vector({0, 1, 1})}) == 1);
  CHECK(det({lattice_vector({1, 0}), lattice_vector({1, 2})}) == 2);
  CHECK(det({lattice_vector({2, 0, 0})}) == 2);
  CHECK(det({lattice_vector({1, 1, 0}), lattice_vector({1, -1, 0})}) == 2);
  try {
    det({lattice_vector({1, 2}), lattice_vector({2, 4})});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DependentVectors);
  }
}

TEST_CASE("unique relation examples") {
  CHECK(same(unique_relation({lattice_vector({1, 0}), lattice_vector({0, 1}), lattice_vector({1, 1})}),
             lattice_vector({1, 1, -1})));
  CHECK(same(unique_relation({lattice_vector({1, 0}), lattice_vector({-1, 0})}), lattice_vector({1, 1})));
  CHECK(same(unique_relation({lattice_vector({2, 0}), lattice_vector({0, 3}), lattice_vector({2, 3})}),
             lattice_vector({1, 1, -1})));
  try {
    unique_relation({lattice_vector({1, 0, 0}), lattice_vector({0, 1, 0})});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCircuitLike);
  }
}

TEST_CASE("column echelon keeps the transform unimodular") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 5);
    IntegerMatrix m(k, n);
    for (int i = 0; i < k; ++i) m.row(i) = oracle::random_vector(rng, n, 9).transpose();
    auto e = column_echelon(m);
    CHECK((m * e.transform - e.reduced).isZero());
    CHECK((e.transform * e.inverse - IntegerMatrix::Identity(n, n)).isZero());
  }
}

TEST_CASE("det agrees with minors and Gaussian elimination on random inputs") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % n);
    std::vector<LatticeVector> vs;
    for (int i = 0; i < k; ++i) vs.push_back(oracle::random_vector(rng, n, 9));
    Integer ref = oracle::index_by_minors(vs);
    if (ref == 0) {
      CHECK_THROWS_AS(det(vs), Error);
      continue;
    }
    CHECK(det(vs) == ref);
    if (k == n) {
      oracle::RMat m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(vs[static_cast<std::size_t>(i)](j));
      CHECK(Rational(det(vs)) == abs(oracle::det_gauss(m)));
    }
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("unique relation is proportional to the alternating-minor formula") {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 1000) {
    int n = 1 + static_cast<int>(rng() % 6);
    int k = 2 + static_cast<int>(rng() % n);
    if (k > n + 1) k = n + 1;
    std::vector<LatticeVector> base;
    for (int i = 0; i < k - 1; ++i) base.push_back(oracle::random_vector(rng, n, 9));
    if (oracle::index_by_minors(base) == 0) continue;
    LatticeVector extra = LatticeVector::Zero(n);
    for (const auto& b : base) extra += b * Integer(static_cast<long>(rng() % 5) - 2);
    if (is_zero(extra)) continue;
    std::vector<LatticeVector> vs = base;
    vs.insert(vs.begin() + static_cast<long>(rng() % static_cast<std::uint64_t>(k)), extra);
    auto ref = oracle::relation_by_minors(vs);
    REQUIRE(ref);
    LatticeVector r = unique_relation(vs);
    CHECK(proportional(r, *ref));
    CHECK(content(r) == 1);
    LatticeVector sum = LatticeVector::Zero(n);
    for (int i = 0; i < k; ++i) sum += vs[static_cast<std::size_t>(i)] * r(i);
    CHECK(is_zero(sum));
    ++checked;
  }
}

TEST_CASE("saturation coordinates round trip") {
  std::vector<LatticeVector> vs{lattice_vector({2, 0, 2}), lattice_vector({0, 3, 3})};
  Saturation s = saturation(vs, 3);
  CHECK(s.rank == 2);
  LatticeVector x = lattice_vector({1, 1, 2});
  LatticeVector y = s.to_local.transpose() * x;
  CHECK(same(LatticeVector(s.basis.transpose() * y), x));
  CHECK(is_zero(LatticeVector(s.equations.transpose() * x)));
  CHECK(!is_zero(LatticeVector(s.equations.transpose() * lattice_vector({1, 0, 0}))));
}
