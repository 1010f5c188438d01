#include "tss/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tss/error.hpp"
#include "tss/json_io.hpp"

namespace tss {

namespace {

std::string read_input(const std::string& arg) {
  // Inline JSON or a file path.
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in.good()) throw ParseError("cannot read file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TssSurface load_surface(const std::string& arg) { return parse_tss(read_input(arg)); }

Json load_json(const std::string& arg) {
  try {
    return Json::parse(read_input(arg));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("JSON syntax error: ") + e.what());
  }
}

void emit(std::ostream& out, const Json& j, bool pretty) {
  if (pretty) {
    out << j.dump(2) << "\n";
  } else {
    out << j.dump() << "\n";
  }
}

Json decision_json(const DecisionWitness& d) {
  Json j{{"result", d.equivalent}};
  if (d.witness) j["witness"] = to_json(*d.witness);
  return j;
}

struct GroupoidArgs {
  std::string model;
  int samples = 1000;
  double tol = 1e-9;
  double d_omega_tol = 1e-6;
  std::uint64_t seed = 0;
  bool perturb_mult = false;
  bool use_hq = false;
};

Json run_groupoid_verification(const GroupoidArgs& a) {
  VerifyOptions opt;
  opt.samples = a.samples;
  opt.tol = a.tol;
  opt.d_omega_tol = a.d_omega_tol;
  opt.seed = a.seed;
  opt.perturb_multiplication = a.perturb_mult;
  opt.modular_lift_use_hq = a.use_hq;

  VerificationReport combined;
  auto append = [&combined](const VerificationReport& r) {
    combined.checks.insert(combined.checks.end(), r.checks.begin(), r.checks.end());
  };

  if (a.model == "affine") {
    GroupoidModel m(GroupoidModel::Kind::AffinePlane);
    combined.model = m.name();
    append(verify_groupoid_axioms(m, opt));
    append(verify_symplectic_compatibility(m, opt));
    VerifyOptions lift = opt;
    lift.tol = std::min(opt.tol, 1e-10);
    append(verify_modular_lift(m, lift));
  } else if (a.model == "cylinder-one") {
    GroupoidModel m(GroupoidModel::Kind::CylinderOne);
    combined.model = m.name();
    append(verify_groupoid_axioms(m, opt));
    append(verify_symplectic_compatibility(m, opt));
  } else if (a.model == "cylinder-two") {
    GroupoidModel m(GroupoidModel::Kind::CylinderTwo);
    combined.model = m.name();
    append(verify_groupoid_axioms(m, opt));
    append(verify_symplectic_compatibility(m, opt));
    VerifyOptions alpha = opt;
    alpha.tol = 1e-12;
    append(verify_alpha_group_law(alpha));
  } else if (a.model == "dehn-twist") {
    combined.model = "annulus-twist";
    append(verify_twist(default_twist_profile(), opt));
  } else {
    throw ParseError("unknown model \"" + a.model +
                     "\" (expected affine, cylinder-one, cylinder-two or dehn-twist)");
  }
  return to_json(combined);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morita invariants and Picard groups of topologically stable "
               "Poisson structures on surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");

  std::string file_a, file_b, elem_a, elem_b;
  bool strict_volumes = false;

  auto* cmd_validate = app.add_subcommand("validate", "check the TSS document invariants");
  cmd_validate->add_option("surface", file_a)->required();

  auto* cmd_invariants =
      app.add_subcommand("invariants", "labeled graph, Euler characteristic, canonical key");
  cmd_invariants->add_option("surface", file_a)->required();

  auto* cmd_morita = app.add_subcommand("morita", "decide Morita equivalence of two TSS");
  cmd_morita->add_option("first", file_a)->required();
  cmd_morita->add_option("second", file_b)->required();

  auto* cmd_isomorphic = app.add_subcommand(
      "isomorphic", "decide classification up to orientation-preserving diffeomorphism");
  cmd_isomorphic->add_option("first", file_a)->required();
  cmd_isomorphic->add_option("second", file_b)->required();
  cmd_isomorphic->add_flag("--strict-volumes", strict_volumes,
                           "require matching per-leaf volumes");

  auto* cmd_picard = app.add_subcommand("picard", "structured Picard group of a TSS");
  cmd_picard->add_option("surface", file_a)->required();

  auto* cmd_statpic = app.add_subcommand("statpic", "static Picard group of a TSS");
  cmd_statpic->add_option("surface", file_a)->required();

  auto* cmd_compose = app.add_subcommand("compose", "compose two Picard group elements");
  cmd_compose->add_option("surface", file_a)->required();
  cmd_compose->add_option("first", elem_a)->required();
  cmd_compose->add_option("second", elem_b)->required();

  auto* cmd_invert = app.add_subcommand("invert", "invert a Picard group element");
  cmd_invert->add_option("surface", file_a)->required();
  cmd_invert->add_option("element", elem_a)->required();

  auto* cmd_equal = app.add_subcommand("equal", "compare two Picard group elements");
  cmd_equal->add_option("surface", file_a)->required();
  cmd_equal->add_option("first", elem_a)->required();
  cmd_equal->add_option("second", elem_b)->required();

  GroupoidArgs ga;
  auto* cmd_verify = app.add_subcommand("verify-groupoid",
                                        "numerically verify a symplectic groupoid model");
  cmd_verify->add_option("model", ga.model, "affine | cylinder-one | cylinder-two | dehn-twist")
      ->required();
  cmd_verify->add_option("--samples", ga.samples);
  cmd_verify->add_option("--tol", ga.tol);
  cmd_verify->add_option("--d-omega-tol", ga.d_omega_tol);
  cmd_verify->add_option("--seed", ga.seed);
  cmd_verify->add_flag("--perturb-mult", ga.perturb_mult,
                       "negative control: drop the transported q term");
  cmd_verify->add_flag("--use-hq", ga.use_hq, "negative control: lift H_q instead of H_p");

  int genus = 0, ends = 0;
  auto* cmd_report = app.add_subcommand("report-symplectic",
                                        "Picard group of a symplectic surface");
  cmd_report->add_option("--genus", genus)->required();
  cmd_report->add_option("--ends", ends, "boundary circles / ends (0 = closed)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help() << "\n";
    emit(out, Json{{"result", "help"}}, pretty);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    emit(out, Json{{"error", e.what()}}, pretty);
    return 2;
  }

  try {
    if (*cmd_validate) {
      TssSurface s = load_surface(file_a);
      ValidationReport report = validate(s);
      emit(out, to_json(report), pretty);
      return report.valid() ? 0 : 1;
    }
    if (*cmd_invariants) {
      TssSurface s = load_surface(file_a);
      LabeledGraph g = build_graph(s);
      Json j{{"euler_characteristic", euler_characteristic(s)},
             {"graph", to_json(g)},
             {"canonical_key", canonical_key(g)}};
      emit(out, j, pretty);
      return 0;
    }
    if (*cmd_morita) {
      auto d = morita_equivalent(load_surface(file_a), load_surface(file_b));
      emit(out, decision_json(d), pretty);
      return 0;
    }
    if (*cmd_isomorphic) {
      auto d = isomorphic_tss(load_surface(file_a), load_surface(file_b), strict_volumes);
      emit(out, decision_json(d), pretty);
      return 0;
    }
    if (*cmd_picard) {
      emit(out, to_json(picard_group(load_surface(file_a))), pretty);
      return 0;
    }
    if (*cmd_statpic) {
      emit(out, to_json(static_picard(load_surface(file_a))), pretty);
      return 0;
    }
    if (*cmd_compose) {
      PicardGroupDescription d = picard_group(load_surface(file_a));
      PicardElement a = element_from_json(d, load_json(elem_a));
      PicardElement b = element_from_json(d, load_json(elem_b));
      emit(out, to_json(compose(d, a, b)), pretty);
      return 0;
    }
    if (*cmd_invert) {
      PicardGroupDescription d = picard_group(load_surface(file_a));
      PicardElement a = element_from_json(d, load_json(elem_a));
      emit(out, to_json(invert(d, a)), pretty);
      return 0;
    }
    if (*cmd_equal) {
      PicardGroupDescription d = picard_group(load_surface(file_a));
      PicardElement a = element_from_json(d, load_json(elem_a));
      PicardElement b = element_from_json(d, load_json(elem_b));
      EqualityVerdict v = elements_equal(d, a, b);
      Json j;
      switch (v.verdict) {
        case Verdict::Equal:
          j["result"] = true;
          break;
        case Verdict::Distinct:
          j["result"] = false;
          break;
        case Verdict::Unknown:
          j["result"] = "unknown";
          break;
      }
      if (!v.reason.empty()) j["reason"] = v.reason;
      emit(out, j, pretty);
      return 0;
    }
    if (*cmd_verify) {
      emit(out, run_groupoid_verification(ga), pretty);
      return 0;
    }
    if (*cmd_report) {
      SurfaceType s{genus, 0, ends};
      emit(out, to_json(symplectic_surface_picard_report(s)), pretty);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    emit(out, Json{{"error", e.what()}}, pretty);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    emit(out, Json{{"error", e.what()}}, pretty);
    return 1;
  }

  emit(out, Json{{"error", "no subcommand"}}, pretty);
  return 2;
}

}  // namespace tss
