#pragma once

#include "json.hpp"
#include "toric/cobordism.hpp"
#include "toric/factorize.hpp"
#include "toric/monomial.hpp"
#include "toric/pidesing.hpp"

#include <string>
#include <vector>

namespace toric {

using Json = nlohmann::json;

// Integers fit for int64 are written as numbers, larger ones as decimal strings.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const LatticeVector& v);
Json to_json(const std::vector<LatticeVector>& vs);
Json to_json(const Cone& sigma);
Json to_json(const Fan& fan);
Json to_json(const Cobordism& b);

Integer integer_from_json(const Json& j);
LatticeVector vector_from_json(const Json& j);
std::vector<LatticeVector> vectors_from_json(const Json& j);
// {"dim", "rays"}.
Cone cone_from_json(const Json& j);
// {"dim", "rays", "max_cones"}; validated with make_fan. Non-primitive rays
// are primitivized and reported in warnings.
Fan fan_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);
// A fan file with "collapse_vector"; defaults to the last unit vector.
Cobordism cobordism_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);

struct IdealProblem {
  Cone cone;
  std::vector<MonomialIdeal> ideals;
  std::vector<LatticeVector> markers;
};

// {"cone": {"dim", "rays"}, "ideals": [{"gens": [...], "marker": index into gens}]}.
IdealProblem ideals_from_json(const Json& j);
Json to_json(const IdealProblem& p);

// Certificates: {"kind", "initial_digest", "final_digest", "steps"}. A
// factorization also carries its "start" and "end" fans.
Json to_json(const PiDesingCertificate& c);
Json to_json(const Factorization& f);
PiDesingCertificate pidesing_certificate_from_json(const Json& j);
Factorization factorization_from_json(const Json& j);

// Compact dump with sorted keys.
std::string canonical(const Json& j);
std::string sha256_hex(const std::string& data);
std::string digest(const Fan& fan);
std::string digest(const Cobordism& b);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace toric
