#include "proxtopo/planar_regions.hpp"

#include <algorithm>
#include <cmath>

#include "proxtopo/error.hpp"

namespace proxtopo::planar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Vec2& center(const Primitive& p) {
  return std::visit([](const auto& s) -> const Vec2& { return s.c; }, p);
}

// Radius of disks and circles; points report 0.
Rational radius(const Primitive& p) {
  return std::visit(overloaded{[](const Pt&) { return Rational(0); }, [](const auto& s) { return s.r; }}, p);
}

bool is_disk(const Primitive& p) {
  return std::holds_alternative<OpenDisk>(p) || std::holds_alternative<ClosedDisk>(p);
}

Primitive closure_of(const Primitive& p) {
  if (const auto* d = std::get_if<OpenDisk>(&p)) return ClosedDisk{d->c, d->r};
  return p;
}

// Exact intersection of two primitives. With d the center distance (known
// only through d^2), each case reduces to comparisons of d with rationals.
bool meets(const Primitive& a, const Primitive& b) {
  const Rational d2 = squared_distance(center(a), center(b));
  return std::visit(
      overloaded{
          [&](const Pt&, const Pt&) { return d2 == 0; },
          [&](const Pt&, const OpenDisk& q) { return d2 < q.r * q.r; },
          [&](const Pt&, const ClosedDisk& q) { return d2 <= q.r * q.r; },
          [&](const Pt&, const Circle& q) { return d2 == q.r * q.r; },
          [&](const OpenDisk& p, const OpenDisk& q) { return sqrt_lt(d2, p.r + q.r); },
          [&](const OpenDisk& p, const ClosedDisk& q) { return sqrt_lt(d2, p.r + q.r); },
          [&](const ClosedDisk& p, const ClosedDisk& q) { return sqrt_le(d2, p.r + q.r); },
          // The circle's distance from the disk center is |d - r_circle|.
          [&](const OpenDisk& p, const Circle& q) { return sqrt_gt(d2, q.r - p.r) && sqrt_lt(d2, q.r + p.r); },
          [&](const ClosedDisk& p, const Circle& q) { return sqrt_ge(d2, q.r - p.r) && sqrt_le(d2, q.r + p.r); },
          [&](const Circle& p, const Circle& q) {
            const Rational diff = p.r > q.r ? Rational(p.r - q.r) : Rational(q.r - p.r);
            return sqrt_ge(d2, diff) && sqrt_le(d2, p.r + q.r);
          },
          [&](const auto&, const auto&) { return meets(b, a); },
      },
      a, b);
}

// p ⊆ q for single primitives.
bool inside(const Primitive& p, const Primitive& q) {
  const Rational d2 = squared_distance(center(p), center(q));
  const Rational rp = radius(p);
  return std::visit(
      overloaded{
          [&](const Pt&) {
            return std::holds_alternative<Pt>(p) && d2 == 0;
          },
          [&](const OpenDisk& s) {
            if (std::holds_alternative<Pt>(p)) return d2 < s.r * s.r;
            if (std::holds_alternative<OpenDisk>(p)) return sqrt_le(d2, s.r - rp);
            return sqrt_lt(d2, s.r - rp);  // closed disk or circle touches its own boundary
          },
          [&](const ClosedDisk& s) {
            if (std::holds_alternative<Pt>(p)) return d2 <= s.r * s.r;
            return sqrt_le(d2, s.r - rp);
          },
          [&](const Circle& s) {
            if (std::holds_alternative<Pt>(p)) return d2 == s.r * s.r;
            return std::holds_alternative<Circle>(p) && d2 == 0 && rp == s.r;
          },
      },
      q);
}

// cl(p) ⊆ int(q); int(q) is an open disk when q is a disk and empty otherwise.
bool closure_inside_interior(const Primitive& p, const Primitive& q) {
  if (!is_disk(q)) return false;
  const Primitive open = OpenDisk{center(q), radius(q)};
  const Primitive cl = closure_of(p);
  if (std::holds_alternative<Pt>(cl)) return inside(cl, open);
  return sqrt_lt(squared_distance(center(cl), center(q)), radius(q) - radius(cl));
}

bool pair_supported(const Primitive& p, const Primitive& q) {
  if (!meets(closure_of(p), closure_of(q))) return true;
  if (closure_inside_interior(p, q) || closure_inside_interior(q, p)) return true;
  return center(p) == center(q) && radius(p) == radius(q);
}

void require_positive(const Rational& r) {
  if (r <= 0) throw Error(ErrorCode::InvalidRegion, "radius must be positive, got " + to_string(r));
}

std::string vec(const Vec2& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

std::string describe(const Primitive& p) {
  return std::visit(overloaded{
                        [](const Pt& s) { return "Pt" + vec(s.c); },
                        [](const OpenDisk& s) { return "OpenDisk(" + vec(s.c) + "," + to_string(s.r) + ")"; },
                        [](const ClosedDisk& s) { return "ClosedDisk(" + vec(s.c) + "," + to_string(s.r) + ")"; },
                        [](const Circle& s) { return "Circle(" + vec(s.c) + "," + to_string(s.r) + ")"; },
                    },
                    p);
}

std::optional<bool> singleton_convention(const Region& a, const Region& b) {
  if (a.is_empty() || b.is_empty()) return false;
  if (a.is_point() && b.is_point()) return a == b;
  if (a.is_point()) return intersects(a, interior(b));
  if (b.is_point()) return intersects(b, interior(a));
  return std::nullopt;
}

}  // namespace

Region::Region(Primitive p) {
  std::visit(overloaded{[](const Pt&) {}, [](const auto& s) { require_positive(s.r); }}, p);
  members_.push_back(std::move(p));
}

Region Region::point(Vec2 c) { return Region(Pt{std::move(c)}); }
Region Region::open_disk(Vec2 c, Rational r) { return Region(OpenDisk{std::move(c), std::move(r)}); }
Region Region::closed_disk(Vec2 c, Rational r) { return Region(ClosedDisk{std::move(c), std::move(r)}); }
Region Region::circle(Vec2 c, Rational r) { return Region(Circle{std::move(c), std::move(r)}); }

Region Region::unite(const std::vector<Region>& parts) {
  Region out;
  for (const Region& part : parts)
    for (const Primitive& p : part.members_)
      if (std::find(out.members_.begin(), out.members_.end(), p) == out.members_.end()) out.members_.push_back(p);
  return out;
}

bool is_supported(const Region& r) {
  const auto& m = r.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!pair_supported(m[i], m[j])) return false;
  return true;
}

Region interior(const Region& r) {
  if (!is_supported(r))
    throw Error(ErrorCode::UnsupportedConfiguration, "memberwise interior is unsound for " + describe(r));
  std::vector<Region> parts;
  for (const Primitive& p : r.members()) {
    if (const auto* d = std::get_if<OpenDisk>(&p)) parts.push_back(Region(*d));
    if (const auto* d = std::get_if<ClosedDisk>(&p)) parts.push_back(Region(OpenDisk{d->c, d->r}));
  }
  return Region::unite(parts);
}

Region closure(const Region& r) {
  std::vector<Region> parts;
  for (const Primitive& p : r.members()) parts.push_back(Region(closure_of(p)));
  return Region::unite(parts);
}

bool intersects(const Region& a, const Region& b) {
  for (const Primitive& p : a.members())
    for (const Primitive& q : b.members())
      if (meets(p, q)) return true;
  return false;
}

bool memberwise_subset(const Region& a, const Region& b) {
  return std::all_of(a.members().begin(), a.members().end(), [&](const Primitive& p) {
    return std::any_of(b.members().begin(), b.members().end(), [&](const Primitive& q) { return inside(p, q); });
  });
}

bool positive_gap(const Region& a, const Region& b) { return !intersects(closure(a), closure(b)); }

bool strongly_near_ex2(const Region& a, const Region& b) {
  if (auto s = singleton_convention(a, b)) return *s;
  return intersects(interior(a), interior(b));
}

bool strongly_near_ex3(const Region& a, const Region& b) {
  if (auto s = singleton_convention(a, b)) return *s;
  return intersects(a, interior(b)) || intersects(interior(a), b);
}

Vec2 rotate(const Vec2& v, const Rational& cos_t, const Rational& sin_t) {
  return {cos_t * v.x - sin_t * v.y, sin_t * v.x + cos_t * v.y};
}

Region rotate(const Region& r, const Rational& cos_t, const Rational& sin_t) {
  std::vector<Region> parts;
  for (Primitive p : r.members()) {
    std::visit([&](auto& s) { s.c = rotate(s.c, cos_t, sin_t); }, p);
    parts.push_back(Region(std::move(p)));
  }
  return Region::unite(parts);
}

std::string describe(const Region& r) {
  if (r.is_empty()) return "Empty";
  if (r.members().size() == 1) return describe(r.members().front());
  std::string out = "Union(";
  for (std::size_t i = 0; i < r.members().size(); ++i) {
    if (i) out += ",";
    out += describe(r.members()[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

bool ScenarioResult::verdict() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

const Claim* ScenarioResult::find(const std::string& name) const {
  for (const Claim& c : claims)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Region> thm2_dir1_candidates() {
  std::vector<Region> out;
  const Rational radii[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j)
      for (const Rational& r : radii)
        out.push_back(Region::open_disk({Rational(3 * i, 5) - 3, Rational(3 * j, 5) - 3}, r));
  return out;
}

ScenarioResult scenario_thm2_dir1(const Dir1Params& params) {
  const Region a = Region::open_disk({0, 0}, params.a_radius);
  const Region& e = params.e;
  if (!intersects(e, a))
    throw Error(ErrorCode::SetupInvalid, "E = " + describe(e) + " does not meet A = " + describe(a));

  ScenarioResult res;
  res.id = "thm2-dir1";
  res.parameters = {{"E", describe(e)}, {"A", describe(a)}};

  const Region int_e = interior(e);
  res.claims.push_back({"E in A-", true, "intersects(E, A) = true"});
  res.claims.push_back({"int E is empty", int_e.is_empty(), "int E = " + describe(int_e)});

  std::size_t accepted = 0;
  std::string first_accepted;
  const auto candidates = thm2_dir1_candidates();
  for (const Region& h : candidates) {
    if (strongly_near_ex2(e, h)) {
      if (accepted++ == 0) first_accepted = describe(h);
    }
  }
  std::string detail = std::to_string(candidates.size()) + " candidates, " + std::to_string(accepted) + " accepted";
  if (accepted) detail += ", first " + first_accepted;
  res.claims.push_back({"E strongly near no candidate H", accepted == 0, detail});

  res.metadata = {{"candidates", std::to_string(candidates.size())},
                  {"accepted", std::to_string(accepted)},
                  {"grid", "centers (3i/5-3, 3j/5-3), i,j in 0..10; radii 1/4,1/2,1,2"},
                  {"relation", "ex2 (interior overlap)"}};
  return res;
}

bool Dir2Params::is_default() const {
  const Dir2Params d;
  return h_center == d.h_center && h_radius == d.h_radius && a_center == d.a_center && a_radius == d.a_radius;
}

ScenarioResult scenario_thm2_dir2(const Dir2Params& p) {
  if (p.h_radius <= 0 || p.a_radius <= 0) throw Error(ErrorCode::SetupInvalid, "radii must be positive");
  const Region h = Region::open_disk(p.h_center, p.h_radius);
  const Region a = Region::open_disk(p.a_center, p.a_radius);
  const Region unit = Region::closed_disk({0, 0}, 1);
  const Region e = Region::closed_disk({0, 0}, 2);

  if (!sqrt_le(squared_distance(p.a_center, p.h_center), p.h_radius - p.a_radius))
    throw Error(ErrorCode::SetupInvalid, "precondition A subset of H fails: " + describe(a) + " vs " + describe(h));
  if (!positive_gap(unit, h))
    throw Error(ErrorCode::SetupInvalid, "precondition gap(B(O,1), H) > 0 fails for H = " + describe(h));
  if (!strongly_near_ex2(e, h))
    throw Error(ErrorCode::SetupInvalid, "precondition E strongly near H fails for H = " + describe(h));

  // s = |a_center|; when that is irrational use a nearby rational that still
  // puts the circle through A.
  const Rational norm2 = squared_norm(p.a_center);
  bool s_exact = true;
  Rational s;
  if (auto root = exact_sqrt(norm2)) {
    s = *root;
  } else {
    s_exact = false;
    const double approx = std::sqrt(to_double(norm2));
    s = Rational(static_cast<long long>(std::llround(approx * 1e9)), 1000000000LL);
  }
  const Region circle = Region::circle({0, 0}, s);
  if (!intersects(circle, a)) throw Error(ErrorCode::SetupInvalid, "no rational radius found for S(O,s) through A");
  const Region c = Region::unite({unit, circle});
  const Region int_c = interior(c);

  ScenarioResult res;
  res.id = "thm2-dir2";
  res.parameters = {{"h_center", to_string(p.h_center.x) + "," + to_string(p.h_center.y)},
                    {"h_radius", to_string(p.h_radius)},
                    {"a_center", to_string(p.a_center.x) + "," + to_string(p.a_center.y)},
                    {"a_radius", to_string(p.a_radius)}};
  res.claims.push_back({"E strongly near H", true, "E = " + describe(e) + ", int E meets H"});
  res.claims.push_back({"A subset of H", true, "d(a,h) + r_A <= r_H"});
  res.claims.push_back({"C in A-", intersects(c, a), "C = " + describe(c)});
  res.claims.push_back({"C not in H^", !strongly_near_ex2(c, h), "int C = " + describe(int_c)});
  res.metadata = {{"s", to_string(s)},
                  {"s_exact", s_exact ? "true" : "false"},
                  {"shapes", "H and A are modeled as open disks"},
                  {"parameters", p.is_default() ? "artifact defaults" : "user"}};
  return res;
}

std::vector<std::pair<Rational, Rational>> invariance_rotations() {
  std::vector<std::pair<Rational, Rational>> out;
  const std::pair<Rational, Rational> quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Rational c0(3, 5), s0(4, 5);
  for (const auto& [c, s] : quarter) {
    out.emplace_back(c, s);
    out.emplace_back(c * c0 - s * s0, s * c0 + c * s0);
  }
  return out;
}

Dir2Params rotated(const Dir2Params& p, const Rational& cos_t, const Rational& sin_t) {
  Dir2Params q = p;
  q.h_center = rotate(p.h_center, cos_t, sin_t);
  q.a_center = rotate(p.a_center, cos_t, sin_t);
  return q;
}

ScenarioResult scenario_fig31(Fig31Variant variant) {
  // Fixed layout of the two overlapping pairs.
  const Region a = Region::closed_disk({Rational(98, 100), Rational(135, 100)}, Rational(78, 100));
  const Region b = Region::closed_disk({Rational(18, 100), Rational(155, 100)}, Rational(88, 100));
  Vec2 d_center{Rational(238, 100), Rational(225, 100)};
  const Rational d_radius(70, 100);
  const Vec2 e_center{Rational(338, 100), Rational(185, 100)};
  Region e = Region::closed_disk(e_center, 1);

  std::string variant_name = "default";
  if (variant == Fig31Variant::DTangentToE) {
    d_center = {e_center.x - 1 - d_radius, e_center.y};
    variant_name = "d-tangent-to-e";
  } else if (variant == Fig31Variant::EPointInD) {
    e = Region::point(d_center);
    variant_name = "e-point-in-d";
  }
  const Region d = Region::open_disk(d_center, d_radius);

  ScenarioResult res;
  res.id = "fig31";
  res.parameters = {{"variant", variant_name}, {"A", describe(a)}, {"B", describe(b)}, {"D", describe(d)},
                    {"E", describe(e)}};
  res.claims.push_back({"A ex2-strongly near B", strongly_near_ex2(a, b), "int A meets int B"});
  res.claims.push_back({"D ex3-strongly near E", strongly_near_ex3(d, e), "E meets int D or int E meets D"});
  return res;
}

}  // namespace proxtopo::planar
