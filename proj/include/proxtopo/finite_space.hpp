#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "proxtopo/rational.hpp"
#include "proxtopo/subset.hpp"

namespace proxtopo {

/// Planar embedding of a space's points, used by the metric proximity.
struct MetricPoints {
  std::vector<Vec2> coordinates;  // indexed by PointId
};

/// A finite topological space given by its explicit open-set family.
///
/// Construct through build_space(), which validates the family. Closure and
/// interior go through minimal neighborhoods: every finite space is
/// Alexandrov, so min_nbhd(x) (the intersection of all opens containing x)
/// is itself open, x is in cl S iff min_nbhd(x) meets S, and x is in int S
/// iff min_nbhd(x) is a subset of S.
class FiniteSpace {
 public:
  unsigned size() const { return n_; }
  Subset full() const { return Subset::full(n_); }
  /// Opens in increasing mask order.
  const std::vector<Subset>& opens() const { return opens_; }
  Subset min_nbhd(PointId x) const { return min_nbhd_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId x) const { return labels_[x]; }
  std::optional<PointId> find_label(const std::string& name) const;

  bool contains(Subset s) const { return s.subset_of(full()); }
  bool is_open(Subset s) const;
  bool is_closed(Subset s) const { return is_open(s.complement(n_)); }

  Subset closure(Subset s) const;
  Subset interior(Subset s) const;
  bool is_t1() const;
  bool is_discrete() const { return opens_.size() == (std::size_t{1} << n_); }

  const std::optional<MetricPoints>& metric() const { return metric_; }
  /// Copy of this space carrying a planar embedding (one coordinate per point).
  FiniteSpace with_metric(MetricPoints pts) const;

  /// Stable hex digest of (n, opens); labels and coordinates are excluded.
  std::string fingerprint() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  friend FiniteSpace build_space(unsigned, std::vector<Subset>, std::vector<std::string>);
  FiniteSpace() = default;

  unsigned n_ = 0;
  std::vector<Subset> opens_;
  std::vector<Subset> min_nbhd_;
  std::vector<std::string> labels_;
  std::optional<MetricPoints> metric_;
};

/// Validates `opens` as a topology on n points and derives minimal neighborhoods.
/// Duplicate sets are merged. Empty `labels` means default labels a, b, c, ...
/// Throws Error with EmptySpace, SizeLimitExceeded, InvalidSubset,
/// NotClosedUnderUnion / NotClosedUnderIntersection (witness = offending pair)
/// or MissingEmptyOrFull.
FiniteSpace build_space(unsigned n, std::vector<Subset> opens, std::vector<std::string> labels = {});

FiniteSpace discrete_space(unsigned n);
FiniteSpace indiscrete_space(unsigned n);

inline Subset closure(const FiniteSpace& space, Subset s) { return space.closure(s); }
inline Subset interior(const FiniteSpace& space, Subset s) { return space.interior(s); }
inline bool is_t1(const FiniteSpace& space) { return space.is_t1(); }

inline constexpr unsigned kMaxEnumerationPoints = 5;

/// Calls f on every topology over n labeled points. Topologies on a finite set
/// correspond one-to-one with preorders, so this walks all reflexive
/// transitive relations and emits their up-set families.
/// Throws Error(SizeLimitExceeded) when n > 5; n = 0 yields nothing.
void for_each_topology(unsigned n, const std::function<void(const FiniteSpace&)>& f);
std::vector<FiniteSpace> enumerate_topologies(unsigned n);

/// Independent count that tests each of the 2^(2^n) subset families of an
/// n-set for the topology axioms directly. Limited to n <= 4.
std::size_t count_topologies_brute_force(unsigned n);

std::string default_label(PointId x);

}  // namespace proxtopo
