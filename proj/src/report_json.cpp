#include "proxtopo/report_json.hpp"

namespace proxtopo {

Json subset_json(const FiniteSpace& space, Subset s) {
  Json out = Json::array();
  for (PointId x : s.members()) out.push_back(space.label(x));
  return out;
}

Json hyperset_json(const FiniteSpace& space, const HyperSet& set) {
  Json out = Json::array();
  for (HyperPoint e : set.members()) out.push_back(subset_json(space, e));
  return out;
}

Json audit_json(const FiniteSpace& space, const AuditReport& report) {
  Json out = Json::array();
  for (const AxiomResult& r : report.results) {
    Json entry;
    entry["axiom"] = r.axiom;
    entry["status"] = r.holds ? "holds" : "fails";
    if (!r.holds) {
      Json w = Json::object();
      for (const WitnessEntry& e : r.witness) {
        if (e.is_point)
          w[e.name] = space.label(e.value.first());
        else
          w[e.name] = subset_json(space, e.value);
      }
      entry["witness"] = w;
    }
    if (r.informational) entry["informational"] = true;
    entry["relation"] = report.kind;
    out.push_back(entry);
  }
  return out;
}

Json comparison_json(const FiniteSpace& space, const Comparison& cmp) {
  Json out;
  out["verdict"] = to_string(cmp.verdict);
  Json witnesses = Json::array();
  auto add = [&](const char* side, const std::optional<ComparisonWitness>& w) {
    if (!w) return;
    Json j;
    j["open_on"] = side;
    j["generator"] = w->generator;
    j["set"] = hyperset_json(space, w->set);
    j["point"] = subset_json(space, w->point);
    witnesses.push_back(j);
  };
  add("left", cmp.left_not_in_right);
  add("right", cmp.right_not_in_left);
  out["witnesses"] = witnesses;
  return out;
}

Json admissibility_json(const FiniteSpace& space, const AdmissibilityReport& report) {
  auto list = [&](const std::vector<Subset>& v) {
    Json a = Json::array();
    for (Subset s : v) a.push_back(subset_json(space, s));
    return a;
  };
  Json out;
  out["status"] = report.passed() ? "holds" : "fails";
  out["opens_checked"] = report.opens_checked;
  out["strong_preimage_failures"] = list(report.strong_preimage_failures);
  out["strong_trace_failures"] = list(report.strong_trace_failures);
  out["far_miss_preimage_failures"] = list(report.far_miss_preimage_failures);
  out["far_miss_trace_failures"] = list(report.far_miss_trace_failures);
  return out;
}

Json lemma_json(const FiniteSpace& space, const LemmaReport& report) {
  Json out;
  out["status"] = report.violations.empty() ? "holds" : "fails";
  out["pairs_checked"] = report.pairs_checked;
  out["pairs_with_containment"] = report.pairs_with_containment;
  Json v = Json::array();
  for (const LemmaWitness& w : report.violations) {
    Json j;
    j["A"] = subset_json(space, w.a);
    j["H"] = subset_json(space, w.h);
    v.push_back(j);
  }
  out["violations"] = v;
  return out;
}

Json scenario_json(const planar::ScenarioResult& result) {
  Json out;
  out["scenario"] = result.id;
  Json params = Json::object();
  for (const auto& [k, v] : result.parameters) params[k] = v;
  out["parameters"] = params;
  Json claims = Json::array();
  for (const planar::Claim& c : result.claims) {
    Json j;
    j["claim"] = c.name;
    j["holds"] = c.holds;
    j["trace"] = c.detail;
    claims.push_back(j);
  }
  out["claims"] = claims;
  Json meta = Json::object();
  for (const auto& [k, v] : result.metadata) meta[k] = v;
  out["metadata"] = meta;
  out["verdict"] = result.verdict();
  return out;
}

}  // namespace proxtopo
