#include "toric/arith.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentVectors: return "DependentVectors";
    case ErrorCode::NotCircuitLike: return "NotCircuitLike";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::DetTooLarge: return "DetTooLarge";
    case ErrorCode::NotAFan: return "NotAFan";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::RayNotInSupport: return "RayNotInSupport";
    case ErrorCode::RayOnExistingRay: return "RayOnExistingRay";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::NotDirectSum: return "NotDirectSum";
    case ErrorCode::NotCovered: return "NotCovered";
    case ErrorCode::NotInSupport: return "NotInSupport";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::ImageNotStrictlyConvex: return "ImageNotStrictlyConvex";
    case ErrorCode::RayAlongCollapse: return "RayAlongCollapse";
    case ErrorCode::BoundaryNotFan: return "BoundaryNotFan";
    case ErrorCode::NotDependent: return "NotDependent";
    case ErrorCode::NotInProjection: return "NotInProjection";
    case ErrorCode::CaseNotApplicable: return "CaseNotApplicable";
    case ErrorCode::NotPiNonsingular: return "NotPiNonsingular";
    case ErrorCode::NotCollapsible: return "NotCollapsible";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotRegularStep: return "NotRegularStep";
    case ErrorCode::MarkerNotGenerator: return "MarkerNotGenerator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

LatticeVector lattice_vector(std::initializer_list<long long> entries) {
  LatticeVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long e : entries) v(i++) = Integer(e);
  return v;
}

LatticeVector unit_vector(int dim, int index) {
  LatticeVector v = LatticeVector::Zero(dim);
  v(index) = 1;
  return v;
}

std::strong_ordering lex_compare(const LatticeVector& a, const LatticeVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return std::strong_ordering::less;
    if (b(i) < a(i)) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::strong_ordering lex_compare(const std::vector<LatticeVector>& a,
                                 const std::vector<LatticeVector>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = lex_compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool same(const LatticeVector& a, const LatticeVector& b) {
  return a.size() == b.size() && lex_compare(a, b) == 0;
}

bool is_zero(const LatticeVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Integer s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * Rational(b(i));
  return s;
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) g = gcd(g, v(i));
    if (g == 1) break;
  }
  return abs(g);
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

LatticeVector primitive_multiple(const RationalVector& v) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, denominator(v(i)));
  LatticeVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i) * Rational(den));
  Integer g = content(out);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive multiple of zero vector");
  if (g != 1)
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer floor_of(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Rational fractional_part(const Rational& q) { return q - Rational(floor_of(q)); }

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v(i).str();
  }
  os << ')';
  return os.str();
}

std::string to_string(const std::vector<LatticeVector>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += to_string(vs[i]);
  }
  return s + "]";
}

void sort_lex(std::vector<LatticeVector>& vs) { std::sort(vs.begin(), vs.end(), LexLess{}); }

void sort_unique_lex(std::vector<LatticeVector>& vs) {
  sort_lex(vs);
  vs.erase(std::unique(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return same(a, b); }),
           vs.end());
}

}  // namespace toric
