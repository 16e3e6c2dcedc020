#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "toric/factorize.hpp"
#include "toric/pidesing.hpp"

using namespace toric;
using namespace testing;

namespace {

Cobordism blowup() { return single_cone_cobordism(cone({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}})); }

Cobordism flop() {
  auto e = vecs({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  return make_cobordism(Fan::from_maximal({make_cone(e, 4)}, 4), lattice_vector({1, 1, -1, -1}));
}

// Two blow-up cones in opposite octants.
Cobordism two_blowups() {
  Fan fan = Fan::from_maximal({cone({{1, 0, 1}, {0, 1, 1}, {1, 1, -1}}), cone({{-1, 0, 1}, {0, -1, 1}, {-1, -1, -1}})}, 3);
  return make_cobordism(fan);
}

std::vector<Fan> replay(const Factorization& f) {
  std::vector<Fan> fans{f.start};
  for (const auto& s : f.steps) {
    if (s.kind == StepKind::BlowUp) fans.push_back(star_subdivision(fans.back(), s.center));
    else fans.push_back(inverse_star_subdivision(fans.back(), s.center, s.carrier));
  }
  return fans;
}

// Lower-side images of each circuit, from relations by minors with v = e_last.
std::vector<Cone> lower_images(const Cobordism& b) {
  std::vector<Cone> out;
  const int n = b.fan().ambient_dim();
  for (const auto& delta : b.fan().maximal_cones()) {
    std::vector<LatticeVector> w;
    for (const auto& r : delta.rays()) w.push_back(oracle::prim(oracle::drop_last(r)));
    auto rel = oracle::relation_by_minors(w);
    if (!rel) continue;
    // Orient so that the sum over rays points along +v.
    Rational height = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto a = oracle::solve({w[i]}, oracle::drop_last(delta.rays()[i]));
      height += Rational((*rel)[i]) * Rational(delta.rays()[i](n - 1)) / (*a)[0];
    }
    const int sign = height > 0 ? 1 : -1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((*rel)[i] * sign >= 0) continue;
      std::vector<LatticeVector> rest;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) rest.push_back(w[j]);
      out.push_back(make_cone(rest, n - 1));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("blow-up cobordism") {
  Cobordism b = blowup();
  auto order = collapse_order(b);
  REQUIRE(order.size() == 1);
  auto f = factorize(b);
  REQUIRE(f.steps.size() == 1);
  CHECK(f.steps[0].kind == StepKind::BlowUp);
  CHECK(same(f.steps[0].center, lattice_vector({1, 1})));
  CHECK(f.start == Fan::from_maximal({cone({{1, 0}, {0, 1}})}, 2));
  CHECK(f.end == Fan::from_maximal({cone({{1, 0}, {1, 1}}), cone({{0, 1}, {1, 1}})}, 2));
  CHECK(verify_factorization(f));

  auto m = elementary_move(f.start, order[0], b);
  CHECK(m.fan == f.end);
  CHECK(code_of([&] { elementary_move(f.end, order[0], b); }) == ErrorCode::NotApplicable);
}

TEST_CASE("flop cobordism") {
  Cobordism b = flop();
  auto f = factorize(b);
  REQUIRE(f.steps.size() == 2);
  CHECK(f.steps[0].kind == StepKind::BlowUp);
  CHECK(f.steps[1].kind == StepKind::BlowDown);
  CHECK(same(f.steps[0].center, f.steps[1].center));
  CHECK_FALSE(f.start == f.end);
  CHECK(verify_factorization(f));
  for (const auto& fan : replay(f)) CHECK(fan.is_regular());
  CHECK(same_support(f.start, f.end));
}

TEST_CASE("circuits with disjoint stars") {
  Cobordism b = two_blowups();
  auto order = collapse_order(b);
  REQUIRE(order.size() == 2);
  CHECK(order[0].cone < order[1].cone);
  auto f = factorize(b);
  CHECK(f.steps.size() == 2);
  CHECK(verify_factorization(f));
  // The other order works too.
  Fan fan = b.projected_minus();
  fan = elementary_move(fan, order[1], b).fan;
  fan = elementary_move(fan, order[0], b).fan;
  CHECK(fan == b.projected_plus());
}

TEST_CASE("singular cobordisms are rejected") {
  Cobordism b = single_cone_cobordism(cone({{1, 0, 1}, {1, 2, 1}, {1, 1, -1}}));
  CHECK(code_of([&] { collapse_order(b); }) == ErrorCode::NotPiNonsingular);
  CHECK(code_of([&] { factorize(b); }) == ErrorCode::NotPiNonsingular);
}

TEST_CASE("tampered factorizations fail verification") {
  Cobordism b = single_cone_cobordism(cone({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 2, -1}}));
  auto f = factorize(pi_desingularize(b).cobordism);
  REQUIRE(f.steps.size() >= 2);
  CHECK(verify_factorization(f));

  auto bad = f;
  bad.steps[0].center = bad.steps[0].center * Integer(2);
  std::vector<std::string> trail;
  CHECK_FALSE(verify_factorization(bad, &trail));
  CHECK_FALSE(trail.empty());

  bad = f;
  std::swap(bad.steps[0], bad.steps[1]);
  CHECK_FALSE(verify_factorization(bad));

  bad = f;
  bad.steps.pop_back();
  CHECK_FALSE(verify_factorization(bad));

  bad = f;
  bad.end = bad.start;
  CHECK_FALSE(verify_factorization(bad));
}

TEST_CASE("random pi-desingularized cobordisms factor") {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Cobordism b = seed % 2 ? random_cobordism(seed, 3, 3) : random_stacked_cobordism(seed, 3, 2);
    Cobordism c = pi_desingularize(b).cobordism;
    auto f = factorize(c);
    CHECK(f.out_of_order == 0);
    CHECK(verify_factorization(f));
    if (!f.steps.empty()) ++nontrivial;
    if (f.start.is_regular())
      for (const auto& fan : replay(f)) CHECK(fan.is_regular());

    // Cones away from every lower circuit image are untouched.
    auto lower = lower_images(c);
    for (const auto& sigma : f.start.maximal_cones())
      if (std::find(lower.begin(), lower.end(), sigma) == lower.end()) CHECK(f.end.has_cone(sigma));
  }
  CHECK(nontrivial > 10);
}
