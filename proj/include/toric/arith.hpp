#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using LatticeVector = Vector<Integer>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

LatticeVector lattice_vector(std::initializer_list<long long> entries);
LatticeVector unit_vector(int dim, int index);

std::strong_ordering lex_compare(const LatticeVector& a, const LatticeVector& b);
std::strong_ordering lex_compare(const std::vector<LatticeVector>& a,
                                 const std::vector<LatticeVector>& b);

struct LexLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    return lex_compare(a, b) < 0;
  }
  bool operator()(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) const {
    return lex_compare(a, b) < 0;
  }
};

bool same(const LatticeVector& a, const LatticeVector& b);
bool is_zero(const LatticeVector& v);
Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);

// gcd of the entries, zero for the zero vector
Integer content(const LatticeVector& v);

RationalVector to_rational(const LatticeVector& v);
// Smallest positive integer multiple of v, made primitive.
LatticeVector primitive_multiple(const RationalVector& v);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& q);
Rational fractional_part(const Rational& q);

std::string to_string(const LatticeVector& v);
std::string to_string(const std::vector<LatticeVector>& vs);

void sort_lex(std::vector<LatticeVector>& vs);
void sort_unique_lex(std::vector<LatticeVector>& vs);

}  // namespace toric
