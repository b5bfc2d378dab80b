#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "proxtopo/finite_space.hpp"
#include "proxtopo/rational.hpp"
#include "proxtopo/subset.hpp"

namespace proxtopo {

/// Which nearness relation to evaluate.
///
///   Intersection     A ∩ B ≠ ∅ (ex1; both a Lodato and an almost proximity)
///   InteriorOverlap  int A ∩ int B ≠ ∅ with singleton conventions (ex2)
///   Mixed            (A ∩ int B) ∪ (int A ∩ B) ≠ ∅ with singleton conventions (ex3)
///   MetricGap        gap(A,B) <= epsilon over the space's planar embedding
///   ClosureLodato    cl A ∩ cl B ≠ ∅
struct ProximityKind {
  enum class Tag { Intersection, InteriorOverlap, Mixed, MetricGap, ClosureLodato };

  Tag tag = Tag::Intersection;
  Rational epsilon = 0;  // MetricGap only

  static ProximityKind intersection() { return {Tag::Intersection, 0}; }
  static ProximityKind interior_overlap() { return {Tag::InteriorOverlap, 0}; }
  static ProximityKind mixed() { return {Tag::Mixed, 0}; }
  static ProximityKind metric_gap(Rational eps = 0) { return {Tag::MetricGap, std::move(eps)}; }
  static ProximityKind closure_lodato() { return {Tag::ClosureLodato, 0}; }

  friend bool operator==(const ProximityKind&, const ProximityKind&) = default;
};

/// Kinds usable as strongly-near relations: Intersection, InteriorOverlap, Mixed.
bool is_strong_kind(const ProximityKind& kind);
/// Kinds audited as classical proximities: Intersection, MetricGap, ClosureLodato.
bool is_classical_kind(const ProximityKind& kind);

/// CLI spelling: ex1 | ex2 | ex3 | metric:EPS | lodato. Throws Error(UnknownKind).
ProximityKind parse_proximity_kind(std::string_view name);
std::string to_string(const ProximityKind& kind);

/// Infimum distance between two finite point sets. Euclidean distances between
/// rational points are generally irrational, so the value is held squared.
struct Gap {
  bool infinite = true;
  Rational squared = 0;

  /// The distance itself when it is rational.
  std::optional<Rational> exact() const;
  bool at_most(const Rational& eps) const { return !infinite && sqrt_le(squared, eps); }
  bool is_zero() const { return !infinite && squared == 0; }
};

/// d(A,B) = min over pairs; infinite when either side is empty.
Gap gap(Subset a, Subset b, const MetricPoints& pts);

/// A δ B for the given kind. InteriorOverlap and Mixed evaluate their strong
/// relation. MetricGap throws Error(MissingCoordinates) without an embedding.
bool near(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b);

/// A δ̂ B. Singleton conventions for InteriorOverlap and Mixed: {x} against a
/// non-singleton B holds iff x ∈ int B, and {x} against {y} iff x = y.
/// Throws Error(UnsupportedKind) for MetricGap and ClosureLodato.
bool strongly_near(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b);

/// A ≪ B, i.e. A is far from X \ B.
bool strong_inclusion(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b);

/// Smallest-mask C with A ≪ C ≪ B, or nullopt when no subset interpolates.
/// Throws Error(PreconditionFailed) unless A ≪ B.
std::optional<Subset> ef_between(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b);

}  // namespace proxtopo
