#pragma once

#include "toric/cobordism.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

enum class Family { I, II, III };
enum class Profile { NN, NStar, StarN, StarStar };

struct DependentType {
  Family family = Family::I;
  Profile profile = Profile::StarStar;
  Integer n;

  friend bool operator==(const DependentType&, const DependentType&) = default;
};

std::string to_string(const DependentType& t);

// Classification of a dependent cone at level n from its normal relation.
// For family I the profile is (single side, multi side).
DependentType classify_type(const NormalRelation& relation, const Integer& n);
DependentType classify_type(const Cone& delta, const Collapse& collapse, const Integer& n);

// Multiplicity of the image of an independent cone.
Integer projected_multiplicity(const Cone& tau, const Collapse& collapse);

// Largest projected multiplicity over independent cones of the fan.
Integer max_projected_det(const Fan& fan, const Collapse& collapse);

bool is_pi_nonsingular(const Fan& fan, const Collapse& collapse);
bool is_pi_nonsingular(const Cobordism& b);

enum class CenterKind { MidPar, MidCtr };

// A star subdivision center with its witness: for MidPar, center = mid(witness, cone)
// with witness in par of the image of the independent cone; for MidCtr, cone is a
// circuit and center = mid(witness, cone) with witness = ctr(relation, sign).
struct CenterRecord {
  LatticeVector center;
  CenterKind kind = CenterKind::MidPar;
  Cone cone;
  LatticeVector witness;
  int sign = 0;
  std::string step;
};

struct PiDesingCertificate {
  std::vector<CenterRecord> centers;
  std::string initial_digest;
  std::string final_digest;
};

struct PiDesingAudit {
  std::vector<Integer> levels;
  std::size_t step_counts[5] = {0, 0, 0, 0, 0};
  // Newly created cones still meeting the face non-codefinitely whose
  // invariant failed to drop.
  std::size_t invariant_violations = 0;
  // Passes over Steps 1-5 at one level beyond the first.
  std::size_t level_repeats = 0;
};

struct PiDesingOptions {
  std::size_t max_steps = 1000000;
  Integer det_cap = default_det_cap;
};

struct PiDesingResult {
  Cobordism cobordism;
  PiDesingCertificate certificate;
  PiDesingAudit audit;
};

PiDesingResult pi_desingularize(const Cobordism& b, const PiDesingOptions& options = {});

// Replays the certificate, checking every witness, the digests and the
// result. Returns the final fan, or throws VerificationFailure.
Fan verify_pi_desingularization(const Cobordism& b, const PiDesingCertificate& certificate);

// Compares the relation of a maximal dependent cone child of <center>.delta
// with the closed-form update. Throws CaseNotApplicable when center is
// neither mid(ctr) of delta's circuit nor a point over a codefinite face.
bool check_relation_update(const Cone& delta, const LatticeVector& center, const Cone& child,
                           const Collapse& collapse);

}  // namespace toric
