#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace proxtopo {

using PointId = unsigned;

/// Upper bound on the number of points a FiniteSpace may carry; a Subset is a
/// 64-bit membership mask.
inline constexpr unsigned kMaxPoints = 64;

/// A set of point ids of one space, stored as a bit mask (bit i <=> point i).
class Subset {
 public:
  using Mask = std::uint64_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}
  Subset(std::initializer_list<PointId> ids) {
    for (PointId id : ids) bits_ |= Mask{1} << id;
  }

  static constexpr Subset full(unsigned n) {
    return Subset(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr Subset singleton(PointId x) { return Subset(Mask{1} << x); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
  constexpr bool contains(PointId x) const { return (bits_ >> x) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; only meaningful when !empty().
  constexpr PointId first() const { return static_cast<PointId>(std::countr_zero(bits_)); }

  /// Complement relative to an n-point carrier.
  constexpr Subset complement(unsigned n) const { return Subset(~bits_ & full(n).bits_); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<PointId> members() const {
    std::vector<PointId> out;
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<PointId>(std::countr_zero(m)));
    return out;
  }

 private:
  Mask bits_ = 0;
};

/// Calls f(Subset) for every subset of an n-point carrier, in increasing mask order.
template <typename F>
void for_each_subset(unsigned n, F&& f) {
  const Subset::Mask limit = Subset::full(n).bits();
  for (Subset::Mask m = 0;; ++m) {
    f(Subset(m));
    if (m == limit) break;
  }
}

}  // namespace proxtopo
