#pragma once

#include "toric/cobordism.hpp"

#include <string>
#include <vector>

namespace toric {

enum class StepKind { BlowUp, BlowDown };

// One regular star subdivision or its inverse between quotient fans. The
// center lies in the relative interior of carrier, a regular cone of the
// coarser of the two fans.
struct FactorizationStep {
  StepKind kind = StepKind::BlowUp;
  LatticeVector center;
  Cone carrier;
  std::string before_digest;
  std::string after_digest;
  Cone circuit;
};

struct Factorization {
  Fan start;
  Fan end;
  std::vector<FactorizationStep> steps;
  // Moves applied ahead of an earlier circuit of the collapse order.
  std::size_t out_of_order = 0;
};

// Circuits in an order in which their elementary moves can be applied to the
// lower quotient fan. Throws NotPiNonsingular or NotCollapsible.
std::vector<Circuit> collapse_order(const Cobordism& b);

struct ElementaryMove {
  Fan fan;
  std::vector<FactorizationStep> steps;
};

// Replaces the lower triangulation of the circuit's image in fan by the upper
// one through at most one blow-up and one blow-down at e. Throws NotApplicable
// when the lower triangulation is not a full star of fan, NotRegularStep when
// a step fails its regularity check.
ElementaryMove elementary_move(const Fan& fan, const Circuit& circuit, const Cobordism& b);

// Throws NotPiNonsingular, NotCollapsible or the errors of elementary_move.
Factorization factorize(const Cobordism& b);

// Replays every step with its regularity and digest checks. Failures are
// appended to trail when given.
bool verify_factorization(const Factorization& f, std::vector<std::string>* trail = nullptr);

}  // namespace toric
