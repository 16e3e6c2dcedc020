#include "toric/cli.hpp"

#include "CLI11.hpp"
#include "toric/factorize.hpp"
#include "toric/instances.hpp"
#include "toric/io.hpp"
#include "toric/pidesing.hpp"
#include "toric/resolve.hpp"
#include "toric/stable.hpp"

#include <cstdint>
#include <string>

namespace toric {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t max_steps = 100000;
  long long det_cap = 1000000;
  bool verify = false;
  // gen only
  std::string kind = "fan";
  int dim = 3;
  long long bound = 3;
};

Json json_array(const std::vector<std::string>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(x);
  return j;
}

[[noreturn]] void verification_failed(const std::string& what) { throw Error(ErrorCode::VerificationFailure, what); }

Json cmd_validate(const Options& o) {
  Json in = read_json_file(o.input);
  std::vector<std::string> warnings;
  Json r;
  if (in.contains("collapse_vector")) {
    Cobordism b = cobordism_from_json(in, &warnings);
    r = {{"kind", "cobordism"},
         {"digest", digest(b)},
         {"maximal_cones", b.fan().maximal_cones().size()},
         {"circuits", b.circuits().size()},
         {"pi_nonsingular", is_pi_nonsingular(b)}};
  } else {
    Fan fan = fan_from_json(in, &warnings);
    r = {{"kind", "fan"},
         {"digest", digest(fan)},
         {"maximal_cones", fan.maximal_cones().size()},
         {"simplicial", fan.is_simplicial()},
         {"regular", fan.is_regular()}};
  }
  r["warnings"] = json_array(warnings);
  return r;
}

Json cmd_resolve(const Options& o) {
  Fan fan = fan_from_json(read_json_file(o.input));
  Resolution res = resolve_fan(fan, ResolveOptions{Integer(o.det_cap), o.max_steps});
  if (o.verify && !(replay_centers(fan, res.centers) == res.fan))
    verification_failed("replaying the centers does not reproduce the resolution");
  return Json{{"initial_digest", digest(fan)},
              {"final_digest", digest(res.fan)},
              {"centers", to_json(res.centers)},
              {"fan", to_json(res.fan)}};
}

PiDesingOptions pidesing_options(const Options& o) { return PiDesingOptions{o.max_steps, Integer(o.det_cap)}; }

// Replays the serialized certificate so that the file contents are what gets checked.
void check_pidesing(const Cobordism& b, const PiDesingResult& res) {
  auto cert = pidesing_certificate_from_json(to_json(res.certificate));
  Fan fan = verify_pi_desingularization(b, cert);
  if (!(fan == res.cobordism.fan()) || cert.final_digest != digest(res.cobordism))
    verification_failed("replay disagrees with the emitted final digest");
}

Json cmd_pidesing(const Options& o) {
  Cobordism b = cobordism_from_json(read_json_file(o.input));
  PiDesingResult res = pi_desingularize(b, pidesing_options(o));
  if (o.verify) check_pidesing(b, res);
  Json levels = Json::array();
  for (const auto& n : res.audit.levels) levels.push_back(to_json(n));
  return Json{{"certificate", to_json(res.certificate)}, {"cobordism", to_json(res.cobordism)}, {"levels", levels}};
}

// Cobordisms that are not pi-nonsingular are desingularized first.
Json cmd_factorize(const Options& o) {
  Cobordism b = cobordism_from_json(read_json_file(o.input));
  Json r;
  if (!is_pi_nonsingular(b)) {
    PiDesingResult res = pi_desingularize(b, pidesing_options(o));
    if (o.verify) check_pidesing(b, res);
    r["pidesing"] = to_json(res.certificate);
    b = res.cobordism;
  }
  Json cert = to_json(factorize(b));
  if (o.verify) {
    std::vector<std::string> trail;
    if (!verify_factorization(factorization_from_json(cert), &trail))
      verification_failed(trail.empty() ? "factorization replay failed" : trail.front());
  }
  r["certificate"] = std::move(cert);
  return r;
}

Json cmd_stable(const Options& o) {
  IdealProblem p = ideals_from_json(read_json_file(o.input));
  Cone inv = inv_cone(p.cone, p.ideals, p.markers);
  return Json{{"inv", to_json(inv)}, {"inv_dim", inv.dim()}};
}

Json cmd_gen(const Options& o) {
  if (o.kind == "fan") return to_json(random_simplicial_fan(o.seed, o.dim, o.bound, Integer(o.det_cap)));
  if (o.kind == "cobordism") return to_json(random_cobordism(o.seed, o.dim, o.bound));
  return to_json(random_stacked_cobordism(o.seed, o.dim, o.bound));
}

std::string text_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// One line per scalar field. Center and step lists get one line per entry,
// other nested arrays only their length.
void print_text(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, v] : j.items()) {
    const std::string name = prefix + key;
    if (v.is_object()) {
      print_text(out, v, name + ".");
    } else if (v.is_array() && (key == "centers" || key == "steps")) {
      out << name << ": " << v.size() << "\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Json& s = v[i];
        out << "  " << i << "  ";
        if (!s.is_object()) out << s.dump();
        else if (s.contains("provenance")) out << text_value(s["provenance"]) << " " << s["center"].dump();
        else out << text_value(s["kind"]) << " " << s["center"].dump();
        out << "\n";
      }
    } else if (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object())) {
      out << name << ": " << v.size() << " entries\n";
    } else {
      out << name << ": " << text_value(v) << "\n";
    }
  }
}

void report(std::ostream& err, const std::string& error, const std::string& detail, int code) {
  err << Json{{"error", error}, {"detail", detail}, {"exit_code", code}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Toric resolution, cobordism desingularization and weak factorization"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", o.input, "input JSON file");
    if (needs_input) in->required();
    sub->add_option("--output", o.output, "write the result or certificate here");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--max-steps", o.max_steps, "star subdivision cap");
    sub->add_option("--det-cap", o.det_cap, "largest multiplicity enumerated")->check(CLI::PositiveNumber);
    sub->add_flag("--verify", o.verify, "replay the emitted certificate");
    return sub;
  };
  auto* validate = common(app.add_subcommand("validate", "check a fan or cobordism file"), true);
  auto* resolve = common(app.add_subcommand("resolve", "regular refinement of a simplicial fan"), true);
  auto* pidesing = common(app.add_subcommand("pidesing", "make a cobordism pi-nonsingular"), true);
  auto* factor = common(app.add_subcommand("factorize", "blow-ups and blow-downs between the quotients"), true);
  auto* stable = common(app.add_subcommand("stable-support", "invariant face of a marked ideal list"), true);
  auto* gen = common(app.add_subcommand("gen", "random instance generator"), false);
  gen->add_option("--kind", o.kind, "fan, cobordism or stacked-cobordism")
      ->check(CLI::IsMember({"fan", "cobordism", "stacked-cobordism"}));
  gen->add_option("--dim", o.dim, "ambient dimension")->check(CLI::Range(1, 8));
  gen->add_option("--bound", o.bound, "largest absolute entry")->check(CLI::Range(1LL, 1000LL));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what(), 1);
    return 1;
  }

  try {
    Json result;
    bool certificate = false;
    if (validate->parsed()) result = cmd_validate(o);
    if (resolve->parsed()) result = cmd_resolve(o);
    if (pidesing->parsed()) result = cmd_pidesing(o), certificate = true;
    if (factor->parsed()) result = cmd_factorize(o), certificate = true;
    if (stable->parsed()) result = cmd_stable(o);
    if (gen->parsed()) result = cmd_gen(o);
    if (!o.output.empty()) write_json_file(o.output, certificate ? result["certificate"] : result);
    if (o.format == "text") print_text(out, result);
    else out << result.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::VerificationFailure ? 2 : 1;
    report(err, std::string(error_name(e.code())), e.detail(), code);
    return code;
  } catch (const std::exception& e) {
    report(err, "InternalError", e.what(), 2);
    return 2;
  }
}

}  // namespace toric
