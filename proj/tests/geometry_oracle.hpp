#pragma once

// Floating-point sampling oracle for planar intersection. It never looks at
// the exact predicates: disks are sampled on a 1e-3 grid over the overlap of
// the two bounding boxes, circles by arc length at 1e-3. A sample counts as
// inside a disk only with a 1e-9 clearance, so a positive answer is certain up
// to rounding far below that clearance.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include "proxtopo/planar_regions.hpp"

namespace proxtopo::oracle {

inline constexpr double kResolution = 1e-3;
inline constexpr double kClearance = 1e-9;
inline constexpr double kMarginThreshold = 1e-2;

struct Shape {
  enum Kind { Point, Disk, Ring } kind;  // open and closed disks share the same sampled interior
  double x, y, r;
};

inline Shape to_shape(const planar::Primitive& p) {
  return std::visit(
      [](const auto& q) -> Shape {
        using T = std::decay_t<decltype(q)>;
        const double x = to_double(q.c.x), y = to_double(q.c.y);
        if constexpr (std::is_same_v<T, planar::Pt>) return {Shape::Point, x, y, 0};
        else if constexpr (std::is_same_v<T, planar::Circle>) return {Shape::Ring, x, y, to_double(q.r)};
        else return {Shape::Disk, x, y, to_double(q.r)};
      },
      p);
}

inline bool in_disk(const Shape& d, double px, double py) {
  return std::hypot(px - d.x, py - d.y) < d.r - kClearance;
}

inline bool disk_disk(const Shape& a, const Shape& b) {
  const double x0 = std::max(a.x - a.r, b.x - b.r), x1 = std::min(a.x + a.r, b.x + b.r);
  const double y0 = std::max(a.y - a.r, b.y - b.r), y1 = std::min(a.y + a.r, b.y + b.r);
  if (x0 > x1 || y0 > y1) return false;
  const double gx = std::ceil(x0 / kResolution), gy0 = std::ceil(y0 / kResolution);
  for (double i = gx; i * kResolution <= x1; i += 1) {
    const double px = i * kResolution;
    for (double j = gy0; j * kResolution <= y1; j += 1) {
      const double py = j * kResolution;
      if (in_disk(a, px, py) && in_disk(b, px, py)) return true;
    }
  }
  return false;
}

inline bool ring_disk(const Shape& ring, const Shape& disk) {
  const long steps = std::max(8L, static_cast<long>(std::ceil(2 * std::numbers::pi * ring.r / kResolution)));
  for (long k = 0; k < steps; ++k) {
    const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps);
    if (in_disk(disk, ring.x + ring.r * std::cos(t), ring.y + ring.r * std::sin(t))) return true;
  }
  return false;
}

/// Sampling verdict for one pair of primitives. Pairs of lower-dimensional
/// pieces (point/circle against point/circle) cannot be certified by sampling
/// and always answer false.
inline bool sampled_meets(const Shape& a, const Shape& b) {
  if (a.kind == Shape::Disk && b.kind == Shape::Disk) return disk_disk(a, b);
  if (a.kind == Shape::Ring && b.kind == Shape::Disk) return ring_disk(a, b);
  if (a.kind == Shape::Disk && b.kind == Shape::Ring) return ring_disk(b, a);
  if (a.kind == Shape::Point && b.kind == Shape::Disk) return in_disk(b, a.x, a.y);
  if (a.kind == Shape::Disk && b.kind == Shape::Point) return in_disk(a, b.x, b.y);
  return false;
}

/// Depth of the guaranteed overlap: the radius of a ball inside both disks,
/// the depth a circle reaches into a disk, or a point's distance from the rim.
/// Lower-dimensional pairs have margin 0.
inline double witness_margin(const Shape& a, const Shape& b) {
  const double d = std::hypot(a.x - b.x, a.y - b.y);
  if (a.kind == Shape::Disk && b.kind == Shape::Disk) return std::min({a.r, b.r, (a.r + b.r - d) / 2});
  if (a.kind == Shape::Ring && b.kind == Shape::Disk) return b.r - std::abs(d - a.r);
  if (a.kind == Shape::Disk && b.kind == Shape::Ring) return a.r - std::abs(d - b.r);
  if (a.kind == Shape::Point && b.kind == Shape::Disk) return b.r - d;
  if (a.kind == Shape::Disk && b.kind == Shape::Point) return a.r - d;
  return 0;
}

struct Verdict {
  bool sampled = false;
  double margin = 0;  // best witness margin over member pairs (may be negative)
};

inline Verdict evaluate(const planar::Region& a, const planar::Region& b) {
  Verdict v;
  v.margin = -1e300;
  for (const auto& p : a.members()) {
    const Shape sa = to_shape(p);
    for (const auto& q : b.members()) {
      const Shape sb = to_shape(q);
      v.margin = std::max(v.margin, witness_margin(sa, sb));
      if (!v.sampled && sampled_meets(sa, sb)) v.sampled = true;
    }
  }
  return v;
}

/// Random regions on a 1/20 coordinate lattice: centers in [-2,2]^2, radii in
/// [1/20, 1]. The lattice makes tangencies and shared centers common.
class RegionSampler {
 public:
  explicit RegionSampler(unsigned seed) : rng_(seed) {}

  planar::Primitive primitive() {
    std::uniform_int_distribution<int> coord(-40, 40), rad(1, 20), kind(0, 3);
    const Vec2 c{Rational(coord(rng_), 20), Rational(coord(rng_), 20)};
    const Rational r(rad(rng_), 20);
    switch (kind(rng_)) {
      case 0: return planar::Pt{c};
      case 1: return planar::OpenDisk{c, r};
      case 2: return planar::ClosedDisk{c, r};
      default: return planar::Circle{c, r};
    }
  }

  /// A region with one to three members that passes the union guard.
  planar::Region region() {
    std::uniform_int_distribution<int> count(1, 3);
    for (;;) {
      std::vector<planar::Region> parts;
      const int n = count(rng_) == 3 ? std::uniform_int_distribution<int>(2, 3)(rng_) : 1;
      for (int i = 0; i < n; ++i) parts.emplace_back(primitive());
      planar::Region r = planar::Region::unite(parts);
      if (planar::is_supported(r)) return r;
    }
  }

 private:
  std::mt19937 rng_;
};

struct AgreementStats {
  std::size_t pairs = 0;
  std::size_t exact_positive = 0;
  std::size_t sampled_positive = 0;
  std::size_t margin_checked = 0;  // exact positives whose margin reached the threshold
  std::size_t violations = 0;
};

/// Checks, on `pairs` seeded random pairs: symmetry of intersects, sampled
/// positive implies exact positive, and exact positive with margin at least
/// 1e-2 implies sampled positive.
inline AgreementStats run_agreement(unsigned seed, std::size_t pairs) {
  RegionSampler gen(seed);
  AgreementStats st;
  for (std::size_t i = 0; i < pairs; ++i) {
    const planar::Region a = gen.region(), b = gen.region();
    const bool exact = planar::intersects(a, b);
    const Verdict v = evaluate(a, b);
    ++st.pairs;
    st.exact_positive += exact;
    st.sampled_positive += v.sampled;
    if (exact != planar::intersects(b, a)) ++st.violations;
    if (v.sampled && !exact) ++st.violations;
    if (exact && v.margin >= kMarginThreshold) {
      ++st.margin_checked;
      if (!v.sampled) ++st.violations;
    }
  }
  return st;
}

}  // namespace proxtopo::oracle
