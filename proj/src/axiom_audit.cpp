#include "proxtopo/axiom_audit.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "proxtopo/error.hpp"

namespace proxtopo {

namespace {

void guard_size(const FiniteSpace& space, const AuditOptions& opts) {
  const unsigned n = space.size();
  if (n > 5 || (n == 5 && !opts.allow_five_points))
    throw Error(ErrorCode::SizeLimitExceeded,
                "audits are limited to 4 points (5 with the override); space has " + std::to_string(n));
}

// Dense relation table over all subset pairs of the space.
class RelationTable {
 public:
  RelationTable(unsigned n, const std::function<bool(Subset, Subset)>& rel)
      : stride_(std::size_t{1} << n), cells_(stride_ * stride_) {
    for (std::size_t a = 0; a < stride_; ++a)
      for (std::size_t b = 0; b < stride_; ++b) cells_[a * stride_ + b] = rel(Subset(a), Subset(b));
  }
  bool operator()(Subset a, Subset b) const { return cells_[a.bits() * stride_ + b.bits()]; }

 private:
  std::size_t stride_;
  std::vector<char> cells_;
};

AxiomResult holds(std::string id, bool informational = false) {
  return {std::move(id), true, {}, informational};
}

AxiomResult fails(std::string id, std::vector<WitnessEntry> w, bool informational = false) {
  return {std::move(id), false, std::move(w), informational};
}

WitnessEntry set(const char* name, Subset s) { return {name, s, false}; }
WitnessEntry point(const char* name, PointId x) { return {name, Subset::singleton(x), true}; }

// Runs check over every subset (pairs, triples) in increasing mask order and
// stops at the first violation.
using Check1 = std::function<bool(Subset)>;
using Check2 = std::function<bool(Subset, Subset)>;
using Check3 = std::function<bool(Subset, Subset, Subset)>;

std::optional<Subset> first_violation(unsigned n, const Check1& ok) {
  std::optional<Subset> bad;
  for_each_subset(n, [&](Subset a) {
    if (!bad && !ok(a)) bad = a;
  });
  return bad;
}

std::optional<std::pair<Subset, Subset>> first_violation(unsigned n, const Check2& ok) {
  const Subset::Mask limit = Subset::full(n).bits();
  for (Subset::Mask a = 0; a <= limit; ++a)
    for (Subset::Mask b = 0; b <= limit; ++b)
      if (!ok(Subset(a), Subset(b))) return std::pair{Subset(a), Subset(b)};
  return std::nullopt;
}

std::optional<std::array<Subset, 3>> first_violation(unsigned n, const Check3& ok) {
  const Subset::Mask limit = Subset::full(n).bits();
  for (Subset::Mask a = 0; a <= limit; ++a)
    for (Subset::Mask b = 0; b <= limit; ++b)
      for (Subset::Mask c = 0; c <= limit; ++c)
        if (!ok(Subset(a), Subset(b), Subset(c))) return std::array{Subset(a), Subset(b), Subset(c)};
  return std::nullopt;
}

AxiomResult check_sets(const std::string& id, unsigned n, const Check1& ok, bool info = false) {
  if (auto v = first_violation(n, ok)) return fails(id, {set("A", *v)}, info);
  return holds(id, info);
}

AxiomResult check_pairs(const std::string& id, unsigned n, const Check2& ok, const char* na = "A",
                        const char* nb = "B") {
  if (auto v = first_violation(n, ok)) return fails(id, {set(na, v->first), set(nb, v->second)});
  return holds(id);
}

AxiomResult check_triples(const std::string& id, unsigned n, const Check3& ok, bool info = false) {
  if (auto v = first_violation(n, ok))
    return fails(id, {set("A", (*v)[0]), set("B", (*v)[1]), set("C", (*v)[2])}, info);
  return holds(id, info);
}

AxiomResult check_points(const std::string& id, unsigned n, const std::function<bool(PointId, PointId)>& ok) {
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y)
      if (!ok(x, y)) return fails(id, {point("x", x), point("y", y)});
  return holds(id);
}

AxiomResult check_point_sets(const std::string& id, unsigned n, const std::function<bool(PointId, Subset)>& ok) {
  for (PointId x = 0; x < n; ++x)
    if (auto v = first_violation(n, Check1([&](Subset a) { return ok(x, a); })))
      return fails(id, {point("x", x), set("A", *v)});
  return holds(id);
}

void require_classical(const ProximityKind& k) {
  if (!is_classical_kind(k))
    throw Error(ErrorCode::UnsupportedKind, to_string(k) + " is not audited as a classical proximity");
}

void require_strong(const ProximityKind& k) {
  if (!is_strong_kind(k)) throw Error(ErrorCode::UnsupportedKind, to_string(k) + " is not a strongly near relation");
}

AuditReport make_report(const FiniteSpace& space, std::string kind) {
  AuditReport r;
  r.space_fingerprint = space.fingerprint();
  r.kind = std::move(kind);
  return r;
}

bool all_points_near(const std::function<bool(Subset, Subset)>& rel, Subset b, Subset c) {
  for (PointId y : b.members())
    if (!rel(Subset::singleton(y), c)) return false;
  return true;
}

Subset near_points(const FiniteSpace& space, const std::function<bool(Subset, Subset)>& rel, Subset a) {
  Subset out;
  for (PointId x = 0; x < space.size(); ++x)
    if (rel(Subset::singleton(x), a)) out |= Subset::singleton(x);
  return out;
}

bool ef_separator_exists(const FiniteSpace& space, const std::function<bool(Subset, Subset)>& rel, Subset a,
                         Subset b) {
  bool found = false;
  for_each_subset(space.size(), [&](Subset e) {
    if (!found && !rel(a, e) && !rel(e.complement(space.size()), b)) found = true;
  });
  return found;
}

}  // namespace

std::optional<Subset> AxiomResult::get(const std::string& name) const {
  for (const auto& w : witness)
    if (w.name == name) return w.value;
  return std::nullopt;
}

const AxiomResult* AuditReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

bool AuditReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.holds || r.informational; });
}

void AuditReport::merge(const AuditReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

AuditReport audit_kuratowski(const FiniteSpace& space, AuditOptions opts) {
  guard_size(space, opts);
  const unsigned n = space.size();
  auto cl = [&](Subset s) { return space.closure(s); };
  AuditReport r = make_report(space, "topology");
  r.results.push_back(cl(Subset{}).empty() ? holds("K1") : fails("K1", {set("A", Subset{})}));
  r.results.push_back(check_sets("K2", n, [&](Subset s) { return s.subset_of(cl(s)); }));
  r.results.push_back(check_sets("K3", n, [&](Subset s) { return cl(cl(s)) == cl(s); }));
  r.results.push_back(check_pairs("K4", n, [&](Subset s, Subset t) { return cl(s | t) == (cl(s) | cl(t)); }));
  return r;
}

AuditReport audit_lodato(const FiniteSpace& space, const ProximityKind& delta, AuditOptions opts) {
  guard_size(space, opts);
  require_classical(delta);
  const unsigned n = space.size();
  const RelationTable near_t(n, [&](Subset a, Subset b) { return near(space, delta, a, b); });
  const std::function<bool(Subset, Subset)> rel = std::cref(near_t);

  AuditReport r = make_report(space, to_string(delta));
  r.results.push_back(check_pairs("P0", n, [&](Subset a, Subset b) { return !near_t(a, b) || near_t(b, a); }));
  r.results.push_back(
      check_pairs("P1", n, [&](Subset a, Subset b) { return !near_t(a, b) || (!a.empty() && !b.empty()); }));
  r.results.push_back(check_pairs("P2", n, [&](Subset a, Subset b) { return !a.intersects(b) || near_t(a, b); }));
  r.results.push_back(check_triples("P3", n, [&](Subset a, Subset b, Subset c) {
    return near_t(a, b | c) == (near_t(a, b) || near_t(a, c));
  }));
  r.results.push_back(check_triples("P4", n, [&](Subset a, Subset b, Subset c) {
    return !(near_t(a, b) && all_points_near(rel, b, c)) || near_t(a, c);
  }));
  r.results.push_back(check_points("P5", n, [&](PointId x, PointId y) {
    return x == y || !near_t(Subset::singleton(x), Subset::singleton(y));
  }));
  return r;
}

AuditReport audit_ef(const FiniteSpace& space, const ProximityKind& delta, AuditOptions opts) {
  guard_size(space, opts);
  require_classical(delta);
  const unsigned n = space.size();
  const RelationTable near_t(n, [&](Subset a, Subset b) { return near(space, delta, a, b); });
  const std::function<bool(Subset, Subset)> rel = std::cref(near_t);
  AuditReport r = make_report(space, to_string(delta));
  r.results.push_back(check_pairs("EF", n, [&](Subset a, Subset b) {
    return near_t(a, b) || ef_separator_exists(space, rel, a, b);
  }));
  return r;
}

AuditReport audit_almost(const FiniteSpace& space, const ProximityKind& kind, AuditOptions opts) {
  guard_size(space, opts);
  require_strong(kind);
  const unsigned n = space.size();
  const Subset full = space.full();
  const RelationTable sn(n, [&](Subset a, Subset b) { return strongly_near(space, kind, a, b); });
  auto in = [&](Subset s) { return space.interior(s); };

  AuditReport r = make_report(space, to_string(kind));
  r.results.push_back(
      check_sets("N0", n, [&](Subset a) { return !sn(Subset{}, a) && (a.empty() || sn(full, a)); }));
  r.results.push_back(check_pairs("N1", n, [&](Subset a, Subset b) { return sn(a, b) == sn(b, a); }));
  r.results.push_back(check_pairs("N2", n, [&](Subset a, Subset b) { return !sn(a, b) || a.intersects(b); }));
  r.results.push_back(check_triples("N3", n, [&](Subset a, Subset b, Subset c) {
    if (in(b).empty() || in(c).empty()) return true;
    return !(sn(a, b) || sn(a, c)) || sn(a, b | c);
  }));
  r.results.push_back(check_triples(
      "N3-converse", n,
      [&](Subset a, Subset b, Subset c) {
        if (in(b).empty() || in(c).empty()) return true;
        return !sn(a, b | c) || sn(a, b) || sn(a, c);
      },
      true));
  r.results.push_back(check_pairs("N4", n, [&](Subset a, Subset b) { return !in(a).intersects(in(b)) || sn(a, b); }));
  r.results.push_back(check_point_sets(
      "N5", n, [&](PointId x, Subset a) { return !in(a).contains(x) || sn(Subset::singleton(x), a); }));
  r.results.push_back(check_points(
      "N6", n, [&](PointId x, PointId y) { return sn(Subset::singleton(x), Subset::singleton(y)) == (x == y); }));
  return r;
}

AuditReport audit_compatibility(const FiniteSpace& space, const ProximityKind& delta, AuditOptions opts) {
  guard_size(space, opts);
  require_classical(delta);
  const std::function<bool(Subset, Subset)> rel = [&](Subset a, Subset b) { return near(space, delta, a, b); };
  AuditReport r = make_report(space, to_string(delta));
  r.results.push_back(check_sets("COMPAT", space.size(),
                                 [&](Subset a) { return near_points(space, rel, a) == space.closure(a); }));
  return r;
}

bool replay_witness(const FiniteSpace& space, const ProximityKind& kind, const AxiomResult& res) {
  if (res.holds) return false;
  const std::string& id = res.axiom;
  if (id.starts_with("K")) return replay_kuratowski_witness(space, res);

  const bool strong = id.starts_with("N");
  const std::function<bool(Subset, Subset)> rel = [&](Subset a, Subset b) {
    return strong ? strongly_near(space, kind, a, b) : near(space, kind, a, b);
  };
  const Subset a = res.get("A").value_or(Subset{});
  const Subset b = res.get("B").value_or(Subset{});
  const Subset c = res.get("C").value_or(Subset{});
  const Subset x = res.get("x").value_or(Subset{});
  const Subset y = res.get("y").value_or(Subset{});
  auto in = [&](Subset s) { return space.interior(s); };

  if (id == "P0") return rel(a, b) && !rel(b, a);
  if (id == "P1") return rel(a, b) && (a.empty() || b.empty());
  if (id == "P2") return a.intersects(b) && !rel(a, b);
  if (id == "P3") return rel(a, b | c) != (rel(a, b) || rel(a, c));
  if (id == "P4") return rel(a, b) && all_points_near(rel, b, c) && !rel(a, c);
  if (id == "P5") return x != y && rel(x, y);
  if (id == "EF") return !rel(a, b) && !ef_separator_exists(space, rel, a, b);
  if (id == "COMPAT") return near_points(space, rel, a) != space.closure(a);
  if (id == "N0") return rel(Subset{}, a) || (!a.empty() && !rel(space.full(), a));
  if (id == "N1") return rel(a, b) != rel(b, a);
  if (id == "N2") return rel(a, b) && !a.intersects(b);
  if (id == "N3") return !in(b).empty() && !in(c).empty() && (rel(a, b) || rel(a, c)) && !rel(a, b | c);
  if (id == "N3-converse")
    return !in(b).empty() && !in(c).empty() && rel(a, b | c) && !(rel(a, b) || rel(a, c));
  if (id == "N4") return in(a).intersects(in(b)) && !rel(a, b);
  if (id == "N5") return in(a).contains(x.first()) && !rel(x, a);
  if (id == "N6") return rel(x, y) != (x == y);
  return false;
}

bool replay_kuratowski_witness(const FiniteSpace& space, const AxiomResult& res) {
  if (res.holds) return false;
  const Subset a = res.get("A").value_or(Subset{});
  const Subset b = res.get("B").value_or(Subset{});
  auto cl = [&](Subset s) { return space.closure(s); };
  if (res.axiom == "K1") return !cl(Subset{}).empty();
  if (res.axiom == "K2") return !a.subset_of(cl(a));
  if (res.axiom == "K3") return cl(cl(a)) != cl(a);
  if (res.axiom == "K4") return cl(a | b) != (cl(a) | cl(b));
  return false;
}

}  // namespace proxtopo
