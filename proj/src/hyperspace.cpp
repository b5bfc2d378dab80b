#include "proxtopo/hyperspace.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "proxtopo/axiom_audit.hpp"
#include "proxtopo/error.hpp"

namespace proxtopo {

namespace {

std::string labels_of(const FiniteSpace& space, Subset s) {
  std::string out = "{";
  for (PointId x : s.members()) {
    if (out.size() > 1) out += ",";
    out += space.label(x);
  }
  return out + "}";
}

void require_open(const FiniteSpace& space, Subset s) {
  if (!space.is_open(s)) throw Error(ErrorCode::NotOpen, labels_of(space, s) + " is not open", {s});
}

void require_t1(const FiniteSpace& space) {
  if (!space.is_t1()) throw Error(ErrorCode::NotT1, "space is not T1");
}

template <typename Pred>
HyperSet select(const FiniteSpace& space, Pred&& keep) {
  std::vector<HyperPoint> out;
  for (HyperPoint e : cl_points(space))
    if (keep(e)) out.push_back(e);
  return HyperSet(std::move(out));
}

HyperSubbase one_per_open(const FiniteSpace& space, std::string name,
                          const std::function<Generator(Subset)>& make) {
  HyperSubbase sb;
  sb.name = std::move(name);
  sb.universe = cl_points(space);
  for (Subset v : space.opens()) sb.generators.push_back(make(v));
  return sb;
}

// The smallest open set of `subbase` around each member of t lies inside t.
std::optional<HyperPoint> escaping_point(const HyperSubbase& subbase, const HyperSet& t) {
  for (HyperPoint e : t.members())
    if (!subbase.minimal_neighborhood(e).subset_of(t)) return e;
  return std::nullopt;
}

std::optional<ComparisonWitness> first_non_open(const HyperSubbase& from, const HyperSubbase& in) {
  for (const Generator& g : from.generators)
    if (auto e = escaping_point(in, g.set)) return ComparisonWitness{g.descriptor, g.set, *e};
  return std::nullopt;
}

Subset points_where(const FiniteSpace& space, const std::function<bool(PointId)>& pred) {
  Subset out;
  for (PointId x = 0; x < space.size(); ++x)
    if (pred(x)) out |= Subset::singleton(x);
  return out;
}

Subset singleton_trace(const FiniteSpace& space, const HyperSet& set) {
  return points_where(space, [&](PointId x) { return set.contains(Subset::singleton(x)); });
}

}  // namespace

HyperSet::HyperSet(std::vector<HyperPoint> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool HyperSet::contains(HyperPoint e) const { return std::binary_search(members_.begin(), members_.end(), e); }

bool HyperSet::subset_of(const HyperSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

HyperSet operator&(const HyperSet& a, const HyperSet& b) {
  HyperSet out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

std::vector<HyperPoint> cl_points(const FiniteSpace& space) {
  std::vector<HyperPoint> out;
  for_each_subset(space.size(), [&](Subset s) {
    if (!s.empty() && space.is_closed(s)) out.push_back(s);
  });
  return out;
}

HyperSet hit_set(const FiniteSpace& space, Subset v) {
  require_open(space, v);
  return select(space, [&](HyperPoint e) { return e.intersects(v); });
}

HyperSet miss_set(const FiniteSpace& space, Subset w) {
  require_open(space, w);
  return select(space, [&](HyperPoint e) { return e.subset_of(w); });
}

CertifiedProximity certify_far_miss_proximity(const FiniteSpace& space, const ProximityKind& delta) {
  if (!is_classical_kind(delta))
    throw Error(ErrorCode::IncompatibleProximity, to_string(delta) + " cannot drive a far-miss half");
  const AuditOptions opts{.allow_five_points = true};
  AuditReport gate = audit_lodato(space, delta, opts);
  gate.merge(audit_compatibility(space, delta, opts));
  for (const AxiomResult& r : gate.results) {
    if (r.holds || r.axiom == "P5") continue;  // separation is not required
    std::vector<Subset> witness;
    for (const auto& w : r.witness) witness.push_back(w.value);
    throw Error(ErrorCode::IncompatibleProximity, to_string(delta) + " fails " + r.axiom + " on this space",
                std::move(witness));
  }
  return CertifiedProximity(delta, space.fingerprint());
}

HyperSet far_miss_set(const FiniteSpace& space, Subset a, const CertifiedProximity& delta) {
  require_open(space, a);
  if (delta.space_fingerprint() != space.fingerprint())
    throw Error(ErrorCode::IncompatibleProximity, "proximity was certified on a different space");
  const Subset outside = a.complement(space.size());
  return select(space, [&](HyperPoint e) { return !near(space, delta.kind(), e, outside); });
}

HyperSet far_miss_set(const FiniteSpace& space, Subset a, const ProximityKind& delta) {
  require_open(space, a);
  return far_miss_set(space, a, certify_far_miss_proximity(space, delta));
}

HyperSet strong_hit_set(const FiniteSpace& space, Subset v, const ProximityKind& kind) {
  require_open(space, v);
  if (!is_strong_kind(kind))
    throw Error(ErrorCode::UnsupportedKind, to_string(kind) + " is not a strongly near relation");
  return select(space, [&](HyperPoint e) { return strongly_near(space, kind, e, v); });
}

HyperSet HyperSubbase::minimal_neighborhood(HyperPoint e) const {
  HyperSet nbhd{universe};
  for (const Generator& g : generators)
    if (g.set.contains(e)) nbhd = nbhd & g.set;
  return nbhd;
}

HyperSubbase hit_subbase(const FiniteSpace& space) {
  return one_per_open(space, "hit", [&](Subset v) {
    return Generator{Generator::Type::Hit, v, std::nullopt, hit_set(space, v), "hit(" + labels_of(space, v) + ")"};
  });
}

HyperSubbase miss_subbase(const FiniteSpace& space) {
  return one_per_open(space, "miss", [&](Subset w) {
    return Generator{Generator::Type::Miss, w, std::nullopt, miss_set(space, w),
                     "miss(" + labels_of(space, w) + ")"};
  });
}

HyperSubbase fell_miss_subbase(const FiniteSpace& space) {
  HyperSubbase sb = miss_subbase(space);
  sb.name = "fell-miss";
  return sb;
}

HyperSubbase far_miss_subbase(const FiniteSpace& space, const ProximityKind& delta) {
  const CertifiedProximity cert = certify_far_miss_proximity(space, delta);
  return one_per_open(space, "far-miss:" + to_string(delta), [&](Subset a) {
    return Generator{Generator::Type::FarMiss, a, delta, far_miss_set(space, a, cert),
                     "far-miss(" + labels_of(space, a) + "," + to_string(delta) + ")"};
  });
}

HyperSubbase strong_hit_subbase(const FiniteSpace& space, const ProximityKind& kind) {
  return one_per_open(space, "strong-hit:" + to_string(kind), [&](Subset v) {
    return Generator{Generator::Type::StrongHit, v, kind, strong_hit_set(space, v, kind),
                     "strong-hit(" + labels_of(space, v) + "," + to_string(kind) + ")"};
  });
}

HyperSubbase join(const HyperSubbase& left, const HyperSubbase& right) {
  if (left.universe != right.universe)
    throw Error(ErrorCode::PreconditionFailed, "cannot join subbases over different spaces");
  HyperSubbase out = left;
  out.name = left.name + "+" + right.name;
  out.generators.insert(out.generators.end(), right.generators.begin(), right.generators.end());
  return out;
}

HyperSubbase parse_subbase(const FiniteSpace& space, const std::string& half) {
  if (auto plus = half.find('+'); plus != std::string::npos)
    return join(parse_subbase(space, half.substr(0, plus)), parse_subbase(space, half.substr(plus + 1)));
  if (half == "hit") return hit_subbase(space);
  if (half == "miss") return miss_subbase(space);
  if (half == "fell-miss") return fell_miss_subbase(space);
  if (half.starts_with("far-miss:")) return far_miss_subbase(space, parse_proximity_kind(half.substr(9)));
  if (half.starts_with("strong-hit:")) {
    ProximityKind k = parse_proximity_kind(half.substr(11));
    if (!is_strong_kind(k)) throw Error(ErrorCode::UnknownKind, "strong-hit needs ex1, ex2 or ex3");
    return strong_hit_subbase(space, k);
  }
  throw Error(ErrorCode::UnknownKind, "unknown hypertopology half '" + half + "'");
}

bool is_open_in(const HyperSubbase& subbase, const HyperSet& t) { return !escaping_point(subbase, t).has_value(); }

std::string to_string(Comparison::Verdict v) {
  switch (v) {
    case Comparison::Verdict::Equal: return "equal";
    case Comparison::Verdict::LeftFiner: return "leftFiner";
    case Comparison::Verdict::RightFiner: return "rightFiner";
    case Comparison::Verdict::Incomparable: return "incomparable";
  }
  return "?";
}

Comparison compare(const HyperSubbase& left, const HyperSubbase& right) {
  if (left.universe != right.universe)
    throw Error(ErrorCode::PreconditionFailed, "cannot compare subbases over different spaces");
  Comparison c;
  c.left_not_in_right = first_non_open(left, right);
  c.right_not_in_left = first_non_open(right, left);
  const bool left_coarser = !c.left_not_in_right;   // τ_left ⊆ τ_right
  const bool right_coarser = !c.right_not_in_left;  // τ_right ⊆ τ_left
  if (left_coarser && right_coarser)
    c.verdict = Comparison::Verdict::Equal;
  else if (left_coarser)
    c.verdict = Comparison::Verdict::RightFiner;
  else if (right_coarser)
    c.verdict = Comparison::Verdict::LeftFiner;
  else
    c.verdict = Comparison::Verdict::Incomparable;
  return c;
}

bool AdmissibilityReport::passed() const {
  return strong_preimage_failures.empty() && strong_trace_failures.empty() && far_miss_preimage_failures.empty() &&
         far_miss_trace_failures.empty();
}

AdmissibilityReport admissibility_check(const FiniteSpace& space, const ProximityKind& kind,
                                        const ProximityKind& delta) {
  require_t1(space);
  const CertifiedProximity cert = certify_far_miss_proximity(space, delta);
  AdmissibilityReport report;
  for (Subset v : space.opens()) {
    ++report.opens_checked;
    const Subset preimage =
        points_where(space, [&](PointId x) { return strongly_near(space, kind, Subset::singleton(x), v); });
    if (preimage != v) report.strong_preimage_failures.push_back(v);
    if (singleton_trace(space, strong_hit_set(space, v, kind)) != v) report.strong_trace_failures.push_back(v);

    const Subset outside = v.complement(space.size());
    const Subset far_preimage =
        points_where(space, [&](PointId x) { return !near(space, delta, Subset::singleton(x), outside); });
    if (far_preimage != v) report.far_miss_preimage_failures.push_back(v);
    if (singleton_trace(space, far_miss_set(space, v, cert)) != v) report.far_miss_trace_failures.push_back(v);
  }
  return report;
}

LemmaReport lemma_check(const FiniteSpace& space, const ProximityKind& kind) {
  require_t1(space);
  LemmaReport report;
  std::vector<HyperSet> hits, strong_hits;
  for (Subset v : space.opens()) {
    hits.push_back(hit_set(space, v));
    strong_hits.push_back(strong_hit_set(space, v, kind));
  }
  const auto& opens = space.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      ++report.pairs_checked;
      if (!hits[i].subset_of(strong_hits[j])) continue;
      ++report.pairs_with_containment;
      if (!opens[i].subset_of(opens[j])) report.violations.push_back({opens[i], opens[j]});
    }
  }
  return report;
}

}  // namespace proxtopo
