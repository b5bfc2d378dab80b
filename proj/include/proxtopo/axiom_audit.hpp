#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proxtopo/finite_space.hpp"
#include "proxtopo/proximity.hpp"

namespace proxtopo {

/// One named value of a violation witness: a subset (A, B, C, E) or a point (x, y).
struct WitnessEntry {
  std::string name;
  Subset value;
  bool is_point = false;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct AxiomResult {
  std::string axiom;  // "P0".."P5", "EF", "COMPAT", "N0".."N6", "K1".."K4", ...
  bool holds = true;
  std::vector<WitnessEntry> witness;  // empty when holds
  /// Reported for information only; not an axiom of the audited relation.
  bool informational = false;

  std::optional<Subset> get(const std::string& name) const;
};

/// Verdicts for one (space, relation) pair. Failing results always carry a
/// witness; replay_witness() re-derives the violation from it.
struct AuditReport {
  std::string space_fingerprint;
  std::string kind;  // to_string(ProximityKind) or "topology"
  std::vector<AxiomResult> results;

  const AxiomResult* find(const std::string& axiom) const;
  /// True when every non-informational result holds.
  bool all_hold() const;
  void merge(const AuditReport& other);
};

struct AuditOptions {
  /// Audits refuse spaces above 4 points unless this is set; 5 is the hard cap.
  bool allow_five_points = false;
};

/// Kuratowski closure axioms: cl ∅ = ∅ (K1), S ⊆ cl S (K2), cl cl S = cl S (K3),
/// cl(S ∪ T) = cl S ∪ cl T (K4).
AuditReport audit_kuratowski(const FiniteSpace& space, AuditOptions opts = {});

/// P0-P5 over all pairs / triples / point pairs; δ must be a classical kind.
AuditReport audit_lodato(const FiniteSpace& space, const ProximityKind& delta, AuditOptions opts = {});

/// For every far pair (A,B) searches all E with A far from E and X\E far from B.
AuditReport audit_ef(const FiniteSpace& space, const ProximityKind& delta, AuditOptions opts = {});

/// N0-N6 for a strong kind. N3 is checked one-directionally as stated; its
/// converse is reported as the informational "N3-converse".
AuditReport audit_almost(const FiniteSpace& space, const ProximityKind& kind, AuditOptions opts = {});

/// {x : {x} δ A} = cl A for every A.
AuditReport audit_compatibility(const FiniteSpace& space, const ProximityKind& delta, AuditOptions opts = {});

/// Re-evaluates a failing result's witness directly through the relation
/// (not the audit's cached table). True iff the violation reproduces.
bool replay_witness(const FiniteSpace& space, const ProximityKind& kind, const AxiomResult& result);
bool replay_kuratowski_witness(const FiniteSpace& space, const AxiomResult& result);

}  // namespace proxtopo
