#pragma once

#include <json.hpp>

#include "proxtopo/axiom_audit.hpp"
#include "proxtopo/finite_space.hpp"
#include "proxtopo/hyperspace.hpp"
#include "proxtopo/planar_regions.hpp"

namespace proxtopo {

// Reports use ordered_json so key order, and therefore the bytes, are fixed.
using Json = nlohmann::ordered_json;

Json subset_json(const FiniteSpace& space, Subset s);
Json hyperset_json(const FiniteSpace& space, const HyperSet& set);

/// [{"axiom":"N0","status":"fails","witness":{"A":["b","c"]}}, ...]
Json audit_json(const FiniteSpace& space, const AuditReport& report);
Json comparison_json(const FiniteSpace& space, const Comparison& cmp);
Json admissibility_json(const FiniteSpace& space, const AdmissibilityReport& report);
Json lemma_json(const FiniteSpace& space, const LemmaReport& report);
Json scenario_json(const planar::ScenarioResult& result);

}  // namespace proxtopo
