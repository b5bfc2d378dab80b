#include "proxtopo/cli.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>

#include "proxtopo/axiom_audit.hpp"
#include "proxtopo/error.hpp"
#include "proxtopo/hyperspace.hpp"
#include "proxtopo/planar_regions.hpp"
#include "proxtopo/report_json.hpp"
#include "proxtopo/space_io.hpp"

namespace proxtopo::cli {

namespace {

struct Options {
  std::string space_file;
  std::string kind;
  bool allow_five = false;

  std::string left;
  std::string right;

  std::string scenario;
  std::optional<std::string> h_center, h_radius, a_center, a_radius;
  std::optional<std::string> e_shape, e_radius;
  std::optional<std::string> variant;

  unsigned n = 0;
  bool brute_force = false;
};

Json space_json(const FiniteSpace& space) {
  Json j;
  j["fingerprint"] = space.fingerprint();
  j["points"] = space.labels();
  j["t1"] = space.is_t1();
  return j;
}

int audit(const Options& o, std::ostream& out) {
  const FiniteSpace space = load_space_file(o.space_file);
  const ProximityKind kind = parse_proximity_kind(o.kind);
  const AuditOptions opts{.allow_five_points = o.allow_five};

  AuditReport all = audit_kuratowski(space, opts);
  if (is_classical_kind(kind)) {
    all.merge(audit_lodato(space, kind, opts));
    all.merge(audit_ef(space, kind, opts));
    all.merge(audit_compatibility(space, kind, opts));
  }
  if (is_strong_kind(kind)) all.merge(audit_almost(space, kind, opts));

  Json report;
  report["command"] = {{"verb", "audit"}, {"space", o.space_file}, {"kind", to_string(kind)}};
  report["space"] = space_json(space);
  report["results"] = audit_json(space, all);
  report["all_hold"] = all.all_hold();
  out << report.dump(2) << "\n";
  return kOk;  // audits observe; failing axioms are data
}

// The strong kind and far-miss proximity named by a half, if any.
void scan_half(const std::string& half, std::optional<ProximityKind>& strong, std::optional<ProximityKind>& delta) {
  std::size_t start = 0;
  while (start <= half.size()) {
    std::size_t end = half.find('+', start);
    if (end == std::string::npos) end = half.size();
    const std::string part = half.substr(start, end - start);
    if (part.starts_with("strong-hit:") && !strong) strong = parse_proximity_kind(part.substr(11));
    if (part.starts_with("far-miss:") && !delta) delta = parse_proximity_kind(part.substr(9));
    start = end + 1;
  }
}

int hyper(const Options& o, std::ostream& out) {
  const FiniteSpace space = load_space_file(o.space_file);
  const HyperSubbase left = parse_subbase(space, o.left);
  const HyperSubbase right = parse_subbase(space, o.right);
  const Comparison cmp = compare(left, right);

  Json report;
  report["command"] = {{"verb", "hyper"}, {"space", o.space_file}, {"left", o.left}, {"right", o.right}};
  report["space"] = space_json(space);
  report["cl_points"] = hyperset_json(space, HyperSet(cl_points(space)));
  report["left"] = {{"name", left.name}, {"generators", left.generators.size()}};
  report["right"] = {{"name", right.name}, {"generators", right.generators.size()}};
  report["comparison"] = comparison_json(space, cmp);

  int code = kOk;
  if (space.is_t1()) {
    std::optional<ProximityKind> strong, delta;
    scan_half(o.left, strong, delta);
    scan_half(o.right, strong, delta);
    const ProximityKind k = strong.value_or(ProximityKind::intersection());
    const ProximityKind d = delta.value_or(ProximityKind::closure_lodato());
    const AdmissibilityReport adm = admissibility_check(space, k, d);
    const LemmaReport lem = lemma_check(space, k);
    report["admissibility"] = admissibility_json(space, adm);
    report["admissibility"]["strong_kind"] = to_string(k);
    report["admissibility"]["far_miss_proximity"] = to_string(d);
    report["lemma"] = lemma_json(space, lem);
    report["lemma"]["strong_kind"] = to_string(k);
    if (!adm.passed() || !lem.violations.empty()) code = kClaimViolated;
  } else {
    report["admissibility"] = {{"status", "skipped"}, {"reason", "NotT1"}};
    report["lemma"] = {{"status", "skipped"}, {"reason", "NotT1"}};
  }
  out << report.dump(2) << "\n";
  return code;
}

planar::Fig31Variant parse_variant(const std::string& v) {
  if (v == "default") return planar::Fig31Variant::Default;
  if (v == "d-tangent-to-e") return planar::Fig31Variant::DTangentToE;
  if (v == "e-point-in-d") return planar::Fig31Variant::EPointInD;
  throw Error(ErrorCode::ParseError, "unknown fig31 variant '" + v + "'");
}

void reject_flags(const std::string& scenario, std::initializer_list<std::pair<const char*, bool>> flags) {
  for (const auto& [name, given] : flags)
    if (given) throw Error(ErrorCode::ParseError, std::string(name) + " does not apply to scenario " + scenario);
}

int scenario(const Options& o, std::ostream& out) {
  planar::ScenarioResult res;
  const bool dir2_flags[] = {o.h_center.has_value(), o.h_radius.has_value(), o.a_center.has_value()};
  if (o.scenario == "thm2-dir2") {
    reject_flags(o.scenario, {{"--e", o.e_shape.has_value()}, {"--e-radius", o.e_radius.has_value()},
                              {"--variant", o.variant.has_value()}});
    planar::Dir2Params p;
    if (o.h_center) p.h_center = parse_vec2(*o.h_center);
    if (o.h_radius) p.h_radius = parse_rational(*o.h_radius);
    if (o.a_center) p.a_center = parse_vec2(*o.a_center);
    if (o.a_radius) p.a_radius = parse_rational(*o.a_radius);
    res = planar::scenario_thm2_dir2(p);
  } else if (o.scenario == "thm2-dir1") {
    reject_flags(o.scenario, {{"--h-center", dir2_flags[0]}, {"--h-radius", dir2_flags[1]},
                              {"--a-center", dir2_flags[2]}, {"--variant", o.variant.has_value()}});
    planar::Dir1Params p;
    const Rational r = o.e_radius ? parse_rational(*o.e_radius) : Rational(1, 2);
    const std::string shape = o.e_shape.value_or("circle");
    if (shape == "circle")
      p.e = planar::Region::circle({0, 0}, r);
    else if (shape == "closed-disk")
      p.e = planar::Region::closed_disk({0, 0}, r);
    else
      throw Error(ErrorCode::ParseError, "--e must be circle or closed-disk");
    if (o.a_radius) p.a_radius = parse_rational(*o.a_radius);
    res = planar::scenario_thm2_dir1(p);
  } else if (o.scenario == "fig31") {
    reject_flags(o.scenario, {{"--h-center", dir2_flags[0]}, {"--h-radius", dir2_flags[1]},
                              {"--a-center", dir2_flags[2]}, {"--a-radius", o.a_radius.has_value()},
                              {"--e", o.e_shape.has_value()}, {"--e-radius", o.e_radius.has_value()}});
    res = planar::scenario_fig31(parse_variant(o.variant.value_or("default")));
  } else {
    throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + o.scenario + "'");
  }
  Json report;
  report["command"] = {{"verb", "scenario"}, {"name", o.scenario}};
  report["result"] = scenario_json(res);
  out << report.dump(2) << "\n";
  return res.verdict() ? kOk : kClaimViolated;
}

int enumerate(const Options& o, std::ostream& out) {
  std::size_t count = 0;
  std::size_t kuratowski_ok = 0;
  for_each_topology(o.n, [&](const FiniteSpace& s) {
    ++count;
    if (o.n <= 4 && audit_kuratowski(s).all_hold()) ++kuratowski_ok;
  });
  Json report;
  report["command"] = {{"verb", "enumerate"}, {"n", o.n}};
  report["topologies"] = count;
  if (o.n <= 4) report["kuratowski_holds"] = kuratowski_ok;
  int code = kOk;
  if (o.brute_force) {
    const std::size_t brute = count_topologies_brute_force(o.n);
    report["brute_force"] = brute;
    report["agree"] = brute == count;
    if (brute != count) code = kClaimViolated;
  }
  out << report.dump(2) << "\n";
  return code;
}

int exit_code_for(ErrorCode c) { return c == ErrorCode::SizeLimitExceeded ? kResourceGuard : kInputError; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proximity and hypertopology toolkit", "proxtopo"};
  app.require_subcommand(1, 1);
  Options o;

  auto* audit_cmd = app.add_subcommand("audit", "Audit a proximity's axioms on a finite space");
  audit_cmd->add_option("--space", o.space_file, "Space file (JSON)")->required();
  audit_cmd->add_option("--kind", o.kind, "ex1 | ex2 | ex3 | metric:EPS | lodato")->required();
  audit_cmd->add_flag("--allow-n5", o.allow_five, "Permit 5-point spaces");

  auto* hyper_cmd = app.add_subcommand("hyper", "Build and compare two hypertopology subbases");
  hyper_cmd->add_option("--space", o.space_file, "Space file (JSON)")->required();
  hyper_cmd->add_option("--left", o.left, "hit | miss | fell-miss | far-miss:KIND | strong-hit:ex1|ex2|ex3, joined with +")
      ->required();
  hyper_cmd->add_option("--right", o.right, "Same syntax as --left")->required();

  auto* scen_cmd = app.add_subcommand("scenario", "Run a planar scenario: fig31 | thm2-dir1 | thm2-dir2");
  scen_cmd->add_option("name", o.scenario, "Scenario id")->required();
  scen_cmd->add_option("--h-center", o.h_center, "thm2-dir2: H center x,y");
  scen_cmd->add_option("--h-radius", o.h_radius, "thm2-dir2: H radius");
  scen_cmd->add_option("--a-center", o.a_center, "thm2-dir2: A center x,y");
  scen_cmd->add_option("--a-radius", o.a_radius, "thm2-dir1/2: A radius");
  scen_cmd->add_option("--e", o.e_shape, "thm2-dir1: circle | closed-disk");
  scen_cmd->add_option("--e-radius", o.e_radius, "thm2-dir1: radius of E");
  scen_cmd->add_option("--variant", o.variant, "fig31: default | d-tangent-to-e | e-point-in-d");

  auto* enum_cmd = app.add_subcommand("enumerate", "Count the topologies on n labeled points");
  enum_cmd->add_option("--n", o.n, "Point count (<= 5)")->required();
  enum_cmd->add_flag("--brute-force", o.brute_force, "Cross-check against the subset-family brute force (n <= 4)");

  std::vector<std::string> argv_storage{"proxtopo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (audit_cmd->parsed())
      code = audit(o, out);
    else if (hyper_cmd->parsed())
      code = hyper(o, out);
    else if (scen_cmd->parsed())
      code = scenario(o, out);
    else
      code = enumerate(o, out);
  } catch (const Error& e) {
    Json report;
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    out << report.dump(2) << "\n";
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    code = exit_code_for(e.code());
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << "wall-time: " << ms << " ms\n";
  return code;
}

}  // namespace proxtopo::cli
