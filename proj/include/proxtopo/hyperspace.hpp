#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proxtopo/finite_space.hpp"
#include "proxtopo/proximity.hpp"

namespace proxtopo {

/// A nonempty closed subset of the base space, i.e. a point of CL(X).
using HyperPoint = Subset;

/// A subset of CL(X), kept sorted and duplicate-free.
class HyperSet {
 public:
  HyperSet() = default;
  explicit HyperSet(std::vector<HyperPoint> members);

  const std::vector<HyperPoint>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(HyperPoint e) const;
  bool subset_of(const HyperSet& other) const;

  friend HyperSet operator&(const HyperSet& a, const HyperSet& b);
  friend bool operator==(const HyperSet&, const HyperSet&) = default;

 private:
  std::vector<HyperPoint> members_;
};

/// All of CL(X) in increasing mask order.
std::vector<HyperPoint> cl_points(const FiniteSpace& space);

/// V⁻ = {E ∈ CL(X) : E ∩ V ≠ ∅}. Throws Error(NotOpen).
HyperSet hit_set(const FiniteSpace& space, Subset v);

/// W⁺ = {E ∈ CL(X) : E ⊆ W}. Throws Error(NotOpen).
HyperSet miss_set(const FiniteSpace& space, Subset w);

/// A proximity that passed the far-miss gate on one space: P0-P4 of the
/// Lodato audit and compatibility with the space's closure. Only
/// certify_far_miss_proximity() creates these.
class CertifiedProximity {
 public:
  const ProximityKind& kind() const { return kind_; }
  const std::string& space_fingerprint() const { return fingerprint_; }

 private:
  friend CertifiedProximity certify_far_miss_proximity(const FiniteSpace&, const ProximityKind&);
  CertifiedProximity(ProximityKind k, std::string fp) : kind_(std::move(k)), fingerprint_(std::move(fp)) {}
  ProximityKind kind_;
  std::string fingerprint_;
};

/// Runs the far-miss gate (spaces up to 5 points). Throws
/// Error(IncompatibleProximity) naming the first failing check.
CertifiedProximity certify_far_miss_proximity(const FiniteSpace& space, const ProximityKind& delta);

/// A⁺⁺ = {E ∈ CL(X) : E far from X \ A}. Throws Error(NotOpen); the
/// ProximityKind overload also throws Error(IncompatibleProximity).
HyperSet far_miss_set(const FiniteSpace& space, Subset a, const CertifiedProximity& delta);
HyperSet far_miss_set(const FiniteSpace& space, Subset a, const ProximityKind& delta);

/// V^⋀ = {E ∈ CL(X) : E strongly near V}. Throws Error(NotOpen) or Error(UnsupportedKind).
HyperSet strong_hit_set(const FiniteSpace& space, Subset v, const ProximityKind& kind);

struct Generator {
  enum class Type { Hit, Miss, FarMiss, StrongHit };
  Type type;
  Subset parameter;  // the open set V, W or A
  std::optional<ProximityKind> kind;
  HyperSet set;
  std::string descriptor;  // e.g. "far-miss({a,b},lodato)"
};

/// Named generators of a topology on CL(X) together with CL(X) itself.
struct HyperSubbase {
  std::string name;
  std::vector<HyperPoint> universe;
  std::vector<Generator> generators;

  /// Intersection of every generator containing e (CL(X) if none does):
  /// the smallest open set of the generated topology around e.
  HyperSet minimal_neighborhood(HyperPoint e) const;
};

/// One generator per open set of the space ("half" of a hypertopology).
HyperSubbase hit_subbase(const FiniteSpace& space);
HyperSubbase miss_subbase(const FiniteSpace& space);
/// Fell miss half: miss generators whose complement is compact. Every subset
/// of a finite space is compact, so this is the full miss family.
HyperSubbase fell_miss_subbase(const FiniteSpace& space);
HyperSubbase far_miss_subbase(const FiniteSpace& space, const ProximityKind& delta);
HyperSubbase strong_hit_subbase(const FiniteSpace& space, const ProximityKind& kind);
/// Generators of both halves; the generated topology is the join.
HyperSubbase join(const HyperSubbase& left, const HyperSubbase& right);

/// Half names: hit | miss | fell-miss | far-miss:<kind> | strong-hit:ex1|ex2|ex3.
HyperSubbase parse_subbase(const FiniteSpace& space, const std::string& half);

/// Whether t is open in the topology generated by subbase.
bool is_open_in(const HyperSubbase& subbase, const HyperSet& t);

struct ComparisonWitness {
  std::string generator;  // descriptor of the generator that fails to be open on the other side
  HyperSet set;
  HyperPoint point;       // member of set whose minimal neighborhood on the other side escapes set
};

struct Comparison {
  enum class Verdict { Equal, LeftFiner, RightFiner, Incomparable };
  Verdict verdict;
  /// A left generator not open on the right, and vice versa, when they exist.
  std::optional<ComparisonWitness> left_not_in_right;
  std::optional<ComparisonWitness> right_not_in_left;
};

std::string to_string(Comparison::Verdict v);

/// left ⊆ right iff every left generator is open in right's topology.
Comparison compare(const HyperSubbase& left, const HyperSubbase& right);

struct AdmissibilityReport {
  // Opens on which the check failed; all empty means the injection x -> {x} is a homeomorphism onto its image.
  std::vector<Subset> strong_preimage_failures;  // {x : {x} δ̂ V} != V
  std::vector<Subset> strong_trace_failures;     // V^⋀ ∩ i(X) != i(V)
  std::vector<Subset> far_miss_preimage_failures;
  std::vector<Subset> far_miss_trace_failures;
  std::size_t opens_checked = 0;

  bool passed() const;
};

/// Checks the canonical injection against strongly-hit generators under kind
/// and far-miss generators under delta. Throws Error(NotT1).
AdmissibilityReport admissibility_check(const FiniteSpace& space, const ProximityKind& kind,
                                        const ProximityKind& delta);

struct LemmaWitness {
  Subset a;
  Subset h;
};

struct LemmaReport {
  std::vector<LemmaWitness> violations;
  std::size_t pairs_checked = 0;
  std::size_t pairs_with_containment = 0;  // pairs where A⁻ ⊆ H^⋀, so the implication is live
};

/// For all open (A, H): A⁻ ⊆ H^⋀ must imply A ⊆ H. Throws Error(NotT1).
LemmaReport lemma_check(const FiniteSpace& space, const ProximityKind& kind);

}  // namespace proxtopo
