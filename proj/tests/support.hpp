#pragma once

#include "doctest.h"
#include "toric/error.hpp"
#include "toric/fan.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

using namespace toric;

inline std::vector<LatticeVector> vecs(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<LatticeVector> out;
  for (auto r : rows) out.push_back(lattice_vector(r));
  return out;
}

inline Cone cone(std::initializer_list<std::initializer_list<long long>> rows) {
  auto v = vecs(rows);
  return make_cone(v, static_cast<int>(v.front().size()));
}

inline ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace testing
