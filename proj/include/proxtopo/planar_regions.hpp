#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "proxtopo/rational.hpp"

namespace proxtopo::planar {

struct Pt {
  Vec2 c;
  friend bool operator==(const Pt&, const Pt&) = default;
};
struct OpenDisk {
  Vec2 c;
  Rational r;
  friend bool operator==(const OpenDisk&, const OpenDisk&) = default;
};
struct ClosedDisk {
  Vec2 c;
  Rational r;
  friend bool operator==(const ClosedDisk&, const ClosedDisk&) = default;
};
struct Circle {
  Vec2 c;
  Rational r;
  friend bool operator==(const Circle&, const Circle&) = default;
};

using Primitive = std::variant<Pt, OpenDisk, ClosedDisk, Circle>;

/// A finite union of points, disks and circles in the rational plane. An empty
/// member list is the empty set; one member is that primitive. Unions are
/// always flat.
class Region {
 public:
  Region() = default;
  Region(Primitive p);  // NOLINT(google-explicit-constructor)

  static Region empty() { return {}; }
  static Region point(Vec2 c);
  /// Radii must be positive; throws Error(InvalidRegion).
  static Region open_disk(Vec2 c, Rational r);
  static Region closed_disk(Vec2 c, Rational r);
  static Region circle(Vec2 c, Rational r);
  static Region unite(const std::vector<Region>& parts);

  const std::vector<Primitive>& members() const { return members_; }
  bool is_empty() const { return members_.empty(); }
  /// A single point, the case the singleton conventions care about.
  bool is_point() const { return members_.size() == 1 && std::holds_alternative<Pt>(members_.front()); }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Primitive> members_;
};

/// Whether the memberwise interior rule is sound for r: every pair of members
/// has disjoint closures, or one member's closure lies in the other's interior,
/// or both share center and radius (points: coincide).
bool is_supported(const Region& r);

Region interior(const Region& r);  // throws Error(UnsupportedConfiguration)
Region closure(const Region& r);

/// Exact nonempty-intersection test.
bool intersects(const Region& a, const Region& b);

/// Sufficient test for a ⊆ b: every member of a lies inside a single member of b.
bool memberwise_subset(const Region& a, const Region& b);

/// gap(a, b) > 0, i.e. the closures are disjoint (all regions are bounded).
bool positive_gap(const Region& a, const Region& b);

/// Interior overlap (ex2): int a ∩ int b ≠ ∅, with point a = {x} strongly near b
/// iff x ∈ int b, and two points iff equal.
bool strongly_near_ex2(const Region& a, const Region& b);
/// Mixed relation (ex3), symmetrized: (a ∩ int b) ∪ (int a ∩ b) ≠ ∅, same singleton conventions.
bool strongly_near_ex3(const Region& a, const Region& b);

/// Rotation about the origin by the rational unit vector (cos_t, sin_t).
Vec2 rotate(const Vec2& v, const Rational& cos_t, const Rational& sin_t);
Region rotate(const Region& r, const Rational& cos_t, const Rational& sin_t);

std::string describe(const Region& r);

// ---------------------------------------------------------------------------
// Scenarios

struct Claim {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ScenarioResult {
  std::string id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> metadata;

  bool verdict() const;
  const Claim* find(const std::string& name) const;
};

struct Dir1Params {
  Region e = Region::circle({0, 0}, Rational(1, 2));
  Rational a_radius = 1;
};

/// Open disk centers on the 11 x 11 grid with step 3/5 over [-3,3]^2, radii
/// 1/4, 1/2, 1, 2: 484 candidates.
std::vector<Region> thm2_dir1_candidates();

/// A = OpenDisk(O, a_radius) is hit by E, yet E is strongly near none of the
/// candidate open disks H. Throws Error(SetupInvalid) when E misses A.
ScenarioResult scenario_thm2_dir1(const Dir1Params& params = {});

struct Dir2Params {
  Vec2 h_center{Rational(13, 5), 0};
  Rational h_radius = 1;
  Vec2 a_center{Rational(11, 5), 0};
  Rational a_radius = Rational(3, 10);

  bool is_default() const;
};

/// E = ClosedDisk(O,2) is strongly near H; C = ClosedDisk(O,1) ∪ Circle(O,s)
/// with s = |a_center| hits A ⊆ H but is not strongly near H. Throws
/// Error(SetupInvalid) naming the failed precondition.
ScenarioResult scenario_thm2_dir2(const Dir2Params& params = {});

/// The eight rotations used for invariance checks: quarter turns, each with
/// and without the extra (3/5, 4/5) rotation.
std::vector<std::pair<Rational, Rational>> invariance_rotations();
Dir2Params rotated(const Dir2Params& p, const Rational& cos_t, const Rational& sin_t);

enum class Fig31Variant { Default, DTangentToE, EPointInD };

/// Two overlapping closed disks A, B (strongly near under ex2) and an open disk
/// D overlapping a closed disk E (strongly near under ex3).
ScenarioResult scenario_fig31(Fig31Variant variant = Fig31Variant::Default);

}  // namespace proxtopo::planar
