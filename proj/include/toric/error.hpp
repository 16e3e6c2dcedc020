#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ZeroVector,
  DependentVectors,
  NotCircuitLike,
  DimensionMismatch,
  NotStrictlyConvex,
  NotSimplicial,
  DetTooLarge,
  NotAFan,
  NotAFace,
  RayNotInSupport,
  RayOnExistingRay,
  SupportMismatch,
  NotDirectSum,
  NotCovered,
  NotInSupport,
  NotInCone,
  StepLimitExceeded,
  ImageNotStrictlyConvex,
  RayAlongCollapse,
  BoundaryNotFan,
  NotDependent,
  NotInProjection,
  CaseNotApplicable,
  NotPiNonsingular,
  NotCollapsible,
  NotApplicable,
  NotRegularStep,
  MarkerNotGenerator,
  ParseError,
  VerificationFailure,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace toric
