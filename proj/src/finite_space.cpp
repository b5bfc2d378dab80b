#include "proxtopo/finite_space.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "proxtopo/error.hpp"

namespace proxtopo {

namespace {

std::string describe(Subset s) {
  std::string out = "{";
  for (PointId x : s.members()) {
    if (out.size() > 1) out += ",";
    out += default_label(x);
  }
  return out + "}";
}

}  // namespace

std::string default_label(PointId x) {
  if (x < 26) return std::string(1, static_cast<char>('a' + x));
  return "p" + std::to_string(x);
}

std::optional<PointId> FiniteSpace::find_label(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<PointId>(it - labels_.begin());
}

bool FiniteSpace::is_open(Subset s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

Subset FiniteSpace::closure(Subset s) const {
  Subset out;
  for (PointId x = 0; x < n_; ++x)
    if (min_nbhd_[x].intersects(s)) out |= Subset::singleton(x);
  return out;
}

Subset FiniteSpace::interior(Subset s) const {
  Subset out;
  for (PointId x = 0; x < n_; ++x)
    if (min_nbhd_[x].subset_of(s)) out |= Subset::singleton(x);
  return out;
}

bool FiniteSpace::is_t1() const {
  for (PointId x = 0; x < n_; ++x)
    if (!is_closed(Subset::singleton(x))) return false;
  return true;
}

FiniteSpace FiniteSpace::with_metric(MetricPoints pts) const {
  if (pts.coordinates.size() != n_)
    throw Error(ErrorCode::MissingCoordinates, "metric embedding needs one coordinate per point");
  FiniteSpace copy = *this;
  copy.metric_ = std::move(pts);
  return copy;
}

std::string FiniteSpace::fingerprint() const {
  // FNV-1a over n followed by the sorted open masks.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(n_);
  for (Subset s : opens_) mix(s.bits());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

FiniteSpace build_space(unsigned n, std::vector<Subset> opens, std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::EmptySpace, "a space needs at least one point");
  if (n > kMaxPoints)
    throw Error(ErrorCode::SizeLimitExceeded, "at most " + std::to_string(kMaxPoints) + " points supported");
  const Subset full = Subset::full(n);
  for (Subset s : opens)
    if (!s.subset_of(full)) throw Error(ErrorCode::InvalidSubset, "open set mentions a point beyond n", {s});

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  auto present = [&](Subset s) { return std::binary_search(opens.begin(), opens.end(), s); };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!present(opens[i] | opens[j]))
        throw Error(ErrorCode::NotClosedUnderUnion,
                    "union of " + describe(opens[i]) + " and " + describe(opens[j]) + " is not open",
                    {opens[i], opens[j]});
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!present(opens[i] & opens[j]))
        throw Error(ErrorCode::NotClosedUnderIntersection,
                    "intersection of " + describe(opens[i]) + " and " + describe(opens[j]) + " is not open",
                    {opens[i], opens[j]});
    }
  }
  if (!present(Subset{})) throw Error(ErrorCode::MissingEmptyOrFull, "empty set is not open");
  if (!present(full)) throw Error(ErrorCode::MissingEmptyOrFull, "whole space is not open");

  if (labels.empty()) {
    for (PointId x = 0; x < n; ++x) labels.push_back(default_label(x));
  } else if (labels.size() != n) {
    throw Error(ErrorCode::InvalidSubset, "label count does not match point count");
  }

  FiniteSpace space;
  space.n_ = n;
  space.min_nbhd_.assign(n, full);
  for (Subset s : opens)
    for (PointId x : s.members()) space.min_nbhd_[x] &= s;
  space.opens_ = std::move(opens);
  space.labels_ = std::move(labels);
  return space;
}

FiniteSpace discrete_space(unsigned n) {
  if (n > 20) throw Error(ErrorCode::SizeLimitExceeded, "discrete space too large to materialize");
  std::vector<Subset> opens;
  for_each_subset(n, [&](Subset s) { opens.push_back(s); });
  return build_space(n, std::move(opens));
}

FiniteSpace indiscrete_space(unsigned n) { return build_space(n, {Subset{}, Subset::full(n)}); }

void for_each_topology(unsigned n, const std::function<void(const FiniteSpace&)>& f) {
  if (n > kMaxEnumerationPoints)
    throw Error(ErrorCode::SizeLimitExceeded, "topology enumeration is limited to 5 points");
  if (n == 0) return;

  // One relation bit per ordered pair (i, j), i != j, meaning i <= j.
  std::vector<std::pair<PointId, PointId>> pairs;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);

  const std::uint64_t relation_count = std::uint64_t{1} << pairs.size();
  std::vector<Subset> up(n);
  for (std::uint64_t rel = 0; rel < relation_count; ++rel) {
    for (PointId i = 0; i < n; ++i) up[i] = Subset::singleton(i);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((rel >> b) & 1u) up[pairs[b].first] |= Subset::singleton(pairs[b].second);

    bool transitive = true;
    for (PointId i = 0; i < n && transitive; ++i)
      for (PointId j : up[i].members())
        if (!up[j].subset_of(up[i])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;

    std::vector<Subset> opens;
    for_each_subset(n, [&](Subset s) {
      for (PointId x : s.members())
        if (!up[x].subset_of(s)) return;
      opens.push_back(s);
    });
    f(build_space(n, std::move(opens)));
  }
}

std::vector<FiniteSpace> enumerate_topologies(unsigned n) {
  std::vector<FiniteSpace> out;
  for_each_topology(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

std::size_t count_topologies_brute_force(unsigned n) {
  if (n > 4) throw Error(ErrorCode::SizeLimitExceeded, "brute-force family check is limited to 4 points");
  if (n == 0) return 0;
  const unsigned subsets = 1u << n;
  const Subset::Mask full = Subset::full(n).bits();
  std::size_t count = 0;
  // family bit s <=> subset with mask s is open
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (!(fam & 1u) || !((fam >> full) & 1u)) continue;
    bool ok = true;
    for (unsigned a = 0; a < subsets && ok; ++a) {
      if (!((fam >> a) & 1u)) continue;
      for (unsigned b = a + 1; b < subsets; ++b) {
        if (!((fam >> b) & 1u)) continue;
        if (!((fam >> (a | b)) & 1u) || !((fam >> (a & b)) & 1u)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace proxtopo
