#include "proxtopo/proximity.hpp"

#include "proxtopo/error.hpp"

namespace proxtopo {

namespace {

using Tag = ProximityKind::Tag;

void require_within(const FiniteSpace& space, Subset a, Subset b) {
  if (!space.contains(a) || !space.contains(b))
    throw Error(ErrorCode::InvalidSubset, "subset mentions a point outside the space", {a, b});
}

// Singleton handling shared by ex2 and ex3; nullopt when neither side is a singleton.
std::optional<bool> singleton_convention(const FiniteSpace& space, Subset a, Subset b) {
  if (a.is_singleton() && b.is_singleton()) return a == b;
  if (a.is_singleton()) return space.interior(b).contains(a.first());
  if (b.is_singleton()) return space.interior(a).contains(b.first());
  return std::nullopt;
}

}  // namespace

bool is_strong_kind(const ProximityKind& kind) {
  return kind.tag == Tag::Intersection || kind.tag == Tag::InteriorOverlap || kind.tag == Tag::Mixed;
}

bool is_classical_kind(const ProximityKind& kind) {
  return kind.tag == Tag::Intersection || kind.tag == Tag::MetricGap || kind.tag == Tag::ClosureLodato;
}

ProximityKind parse_proximity_kind(std::string_view name) {
  if (name == "ex1") return ProximityKind::intersection();
  if (name == "ex2") return ProximityKind::interior_overlap();
  if (name == "ex3") return ProximityKind::mixed();
  if (name == "lodato") return ProximityKind::closure_lodato();
  if (name.starts_with("metric:")) {
    Rational eps;
    try {
      eps = parse_rational(name.substr(7));
    } catch (const Error&) {
      throw Error(ErrorCode::UnknownKind, "bad metric tolerance in '" + std::string(name) + "'");
    }
    if (eps < 0) throw Error(ErrorCode::UnknownKind, "metric tolerance must be nonnegative");
    return ProximityKind::metric_gap(eps);
  }
  throw Error(ErrorCode::UnknownKind, "unknown proximity kind '" + std::string(name) + "'");
}

std::string to_string(const ProximityKind& kind) {
  switch (kind.tag) {
    case Tag::Intersection: return "ex1";
    case Tag::InteriorOverlap: return "ex2";
    case Tag::Mixed: return "ex3";
    case Tag::MetricGap: return "metric:" + to_string(kind.epsilon);
    case Tag::ClosureLodato: return "lodato";
  }
  return "?";
}

std::optional<Rational> Gap::exact() const {
  if (infinite) return std::nullopt;
  return exact_sqrt(squared);
}

Gap gap(Subset a, Subset b, const MetricPoints& pts) {
  Gap g;
  for (PointId x : a.members()) {
    for (PointId y : b.members()) {
      if (x >= pts.coordinates.size() || y >= pts.coordinates.size())
        throw Error(ErrorCode::MissingCoordinates, "point without coordinates");
      Rational d2 = squared_distance(pts.coordinates[x], pts.coordinates[y]);
      if (g.infinite || d2 < g.squared) {
        g.infinite = false;
        g.squared = d2;
      }
    }
  }
  return g;
}

bool near(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b) {
  require_within(space, a, b);
  switch (kind.tag) {
    case Tag::Intersection: return a.intersects(b);
    case Tag::InteriorOverlap:
    case Tag::Mixed: return strongly_near(space, kind, a, b);
    case Tag::ClosureLodato: return space.closure(a).intersects(space.closure(b));
    case Tag::MetricGap:
      if (!space.metric()) throw Error(ErrorCode::MissingCoordinates, "metric proximity needs point coordinates");
      return gap(a, b, *space.metric()).at_most(kind.epsilon);
  }
  return false;
}

bool strongly_near(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b) {
  require_within(space, a, b);
  if (!is_strong_kind(kind))
    throw Error(ErrorCode::UnsupportedKind, to_string(kind) + " is not a strongly near relation");
  if (a.empty() || b.empty()) return false;
  if (kind.tag == Tag::Intersection) return a.intersects(b);
  if (auto s = singleton_convention(space, a, b)) return *s;
  if (kind.tag == Tag::InteriorOverlap) return space.interior(a).intersects(space.interior(b));
  // Mixed, symmetrized.
  return a.intersects(space.interior(b)) || space.interior(a).intersects(b);
}

bool strong_inclusion(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b) {
  return !near(space, kind, a, b.complement(space.size()));
}

std::optional<Subset> ef_between(const FiniteSpace& space, const ProximityKind& kind, Subset a, Subset b) {
  if (!strong_inclusion(space, kind, a, b))
    throw Error(ErrorCode::PreconditionFailed, "ef_between needs A strongly included in B", {a, b});
  std::optional<Subset> found;
  for_each_subset(space.size(), [&](Subset c) {
    if (!found && strong_inclusion(space, kind, a, c) && strong_inclusion(space, kind, c, b)) found = c;
  });
  return found;
}

}  // namespace proxtopo
