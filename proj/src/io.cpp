#include "toric/io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace toric {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int dim_field(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) parse_error("\"dim\" must be a positive integer");
  return d.get<int>();
}

std::vector<LatticeVector> rays_field(const Json& j, int dim, std::vector<std::string>* warnings) {
  auto rays = vectors_from_json(field(j, "rays"));
  for (auto& r : rays) {
    if (r.size() != dim) parse_error("ray " + to_string(r) + " has the wrong length");
    if (is_zero(r)) throw Error(ErrorCode::ZeroVector, "zero ray");
    LatticeVector p = primitive(r);
    if (!same(p, r)) {
      if (warnings) warnings->push_back("ray " + to_string(r) + " replaced by " + to_string(p));
      r = p;
    }
  }
  return rays;
}

}  // namespace

Json to_json(const Integer& x) {
  static const Integer lo(std::numeric_limits<long long>::min()), hi(std::numeric_limits<long long>::max());
  if (x >= lo && x <= hi) return Json(x.convert_to<long long>());
  return Json(x.str());
}

Json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Integer(numerator(x)));
  return Json(x.str());
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const std::vector<LatticeVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const Cone& sigma) { return Json{{"dim", sigma.ambient_dim()}, {"rays", to_json(sigma.rays())}}; }

Json to_json(const Fan& fan) {
  auto rays = fan.rays();
  Json cones = Json::array();
  for (const auto& c : fan.maximal_cones()) {
    Json idx = Json::array();
    for (const auto& r : c.rays()) {
      auto it = std::lower_bound(rays.begin(), rays.end(), r, LexLess{});
      idx.push_back(static_cast<std::size_t>(it - rays.begin()));
    }
    cones.push_back(std::move(idx));
  }
  return Json{{"dim", fan.ambient_dim()}, {"rays", to_json(rays)}, {"max_cones", std::move(cones)}};
}

Json to_json(const Cobordism& b) {
  Json j = to_json(b.fan());
  j["collapse_vector"] = to_json(b.collapse().vector());
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      parse_error("\"" + s + "\" is not an integer");
    return Integer(s);
  }
  parse_error("expected an integer, got " + j.dump());
}

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("expected a nonempty integer array, got " + j.dump());
  LatticeVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = integer_from_json(j[i]);
  return v;
}

std::vector<LatticeVector> vectors_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of vectors");
  std::vector<LatticeVector> out;
  for (const auto& e : j) out.push_back(vector_from_json(e));
  return out;
}

Cone cone_from_json(const Json& j) {
  const int dim = dim_field(j);
  return make_cone(rays_field(j, dim, nullptr), dim);
}

Fan fan_from_json(const Json& j, std::vector<std::string>* warnings) {
  const int dim = dim_field(j);
  auto rays = rays_field(j, dim, warnings);
  const Json& mc = field(j, "max_cones");
  if (!mc.is_array()) parse_error("\"max_cones\" must be an array");
  std::vector<Cone> cones;
  for (const auto& c : mc) {
    if (!c.is_array()) parse_error("each maximal cone must be an array of ray indices");
    std::vector<LatticeVector> gens;
    for (const auto& i : c) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() >= rays.size())
        parse_error("bad ray index " + i.dump());
      gens.push_back(rays[i.get<std::size_t>()]);
    }
    Cone cone = make_cone(gens, dim);
    if (cone.rays().size() != gens.size())
      throw Error(ErrorCode::NotAFan, "generators " + to_string(gens) + " are not all extreme rays");
    cones.push_back(std::move(cone));
  }
  return make_fan(cones, dim);
}

Cobordism cobordism_from_json(const Json& j, std::vector<std::string>* warnings) {
  Fan fan = fan_from_json(j, warnings);
  if (!j.contains("collapse_vector")) return make_cobordism(std::move(fan));
  LatticeVector v = vector_from_json(j.at("collapse_vector"));
  if (v.size() != fan.ambient_dim()) parse_error("collapse vector has the wrong length");
  return make_cobordism(std::move(fan), v);
}

IdealProblem ideals_from_json(const Json& j) {
  IdealProblem p{cone_from_json(field(j, "cone")), {}, {}};
  const Json& ideals = field(j, "ideals");
  if (!ideals.is_array()) parse_error("\"ideals\" must be an array");
  for (const auto& e : ideals) {
    auto gens = vectors_from_json(field(e, "gens"));
    const Json& m = field(e, "marker");
    if (!m.is_number_unsigned() || m.get<std::size_t>() >= gens.size())
      throw Error(ErrorCode::MarkerNotGenerator, "marker " + m.dump() + " is not a generator index");
    p.markers.push_back(gens[m.get<std::size_t>()]);
    p.ideals.emplace_back(p.cone, std::move(gens));
  }
  return p;
}

Json to_json(const IdealProblem& p) {
  Json ideals = Json::array();
  for (std::size_t i = 0; i < p.ideals.size(); ++i) {
    const auto& gens = p.ideals[i].generators();
    auto it = std::find_if(gens.begin(), gens.end(), [&](const auto& g) { return same(g, p.markers[i]); });
    if (it == gens.end()) throw Error(ErrorCode::MarkerNotGenerator, to_string(p.markers[i]));
    ideals.push_back(Json{{"gens", to_json(gens)}, {"marker", static_cast<std::size_t>(it - gens.begin())}});
  }
  return Json{{"cone", to_json(p.cone)}, {"ideals", std::move(ideals)}};
}

std::string canonical(const Json& j) { return j.dump(); }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::VerificationFailure, "SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

namespace {

const std::string& string_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) parse_error(std::string("field \"") + key + "\" must be a string");
  return f.get_ref<const std::string&>();
}

const Json& steps_field(const Json& j, const char* kind) {
  if (string_field(j, "kind") != kind) parse_error(std::string("expected a ") + kind + " certificate");
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) parse_error("\"steps\" must be an array");
  return steps;
}

}  // namespace

Json to_json(const PiDesingCertificate& c) {
  Json steps = Json::array();
  for (const auto& r : c.centers)
    steps.push_back(Json{{"center", to_json(r.center)},
                         {"provenance", r.kind == CenterKind::MidPar ? "MidPar" : "MidCtr"},
                         {"cone", to_json(r.cone)},
                         {"witness", to_json(r.witness)},
                         {"sign", r.sign},
                         {"step", r.step}});
  return Json{{"kind", "pidesing"},
              {"initial_digest", c.initial_digest},
              {"final_digest", c.final_digest},
              {"steps", std::move(steps)}};
}

Json to_json(const Factorization& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps)
    steps.push_back(Json{{"kind", s.kind == StepKind::BlowUp ? "blow-up" : "blow-down"},
                         {"center", to_json(s.center)},
                         {"carrier", to_json(s.carrier)},
                         {"circuit", to_json(s.circuit)},
                         {"before_digest", s.before_digest},
                         {"after_digest", s.after_digest}});
  return Json{{"kind", "factorization"},
              {"initial_digest", digest(f.start)},
              {"final_digest", digest(f.end)},
              {"start", to_json(f.start)},
              {"end", to_json(f.end)},
              {"out_of_order", f.out_of_order},
              {"steps", std::move(steps)}};
}

PiDesingCertificate pidesing_certificate_from_json(const Json& j) {
  PiDesingCertificate c;
  c.initial_digest = string_field(j, "initial_digest");
  c.final_digest = string_field(j, "final_digest");
  for (const auto& s : steps_field(j, "pidesing")) {
    CenterRecord r;
    r.center = vector_from_json(field(s, "center"));
    const std::string& kind = string_field(s, "provenance");
    if (kind != "MidPar" && kind != "MidCtr") parse_error("unknown provenance \"" + kind + "\"");
    r.kind = kind == "MidPar" ? CenterKind::MidPar : CenterKind::MidCtr;
    r.cone = cone_from_json(field(s, "cone"));
    r.witness = vector_from_json(field(s, "witness"));
    const Json& sign = field(s, "sign");
    if (!sign.is_number_integer() || std::abs(sign.get<long long>()) > 1) parse_error("sign must be -1, 0 or 1");
    r.sign = static_cast<int>(sign.get<long long>());
    r.step = string_field(s, "step");
    c.centers.push_back(std::move(r));
  }
  return c;
}

Factorization factorization_from_json(const Json& j) {
  Factorization f;
  const Json& steps = steps_field(j, "factorization");
  f.start = fan_from_json(field(j, "start"));
  f.end = fan_from_json(field(j, "end"));
  if (digest(f.start) != string_field(j, "initial_digest") || digest(f.end) != string_field(j, "final_digest"))
    throw Error(ErrorCode::VerificationFailure, "certificate digests do not match its fans");
  if (j.contains("out_of_order")) {
    const Json& k = j.at("out_of_order");
    if (!k.is_number_unsigned()) parse_error("\"out_of_order\" must be a count");
    f.out_of_order = k.get<std::size_t>();
  }
  for (const auto& s : steps) {
    FactorizationStep step;
    const std::string& kind = string_field(s, "kind");
    if (kind != "blow-up" && kind != "blow-down") parse_error("unknown step kind \"" + kind + "\"");
    step.kind = kind == "blow-up" ? StepKind::BlowUp : StepKind::BlowDown;
    step.center = vector_from_json(field(s, "center"));
    step.carrier = cone_from_json(field(s, "carrier"));
    step.circuit = cone_from_json(field(s, "circuit"));
    step.before_digest = string_field(s, "before_digest");
    step.after_digest = string_field(s, "after_digest");
    f.steps.push_back(std::move(step));
  }
  return f;
}

std::string digest(const Fan& fan) { return sha256_hex(canonical(to_json(fan))); }

std::string digest(const Cobordism& b) { return sha256_hex(canonical(to_json(b))); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) parse_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace toric
