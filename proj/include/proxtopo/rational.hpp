#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace proxtopo {

using Rational = boost::multiprecision::cpp_rational;

/// A point of the rational plane.
struct Vec2 {
  Rational x;
  Rational y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }

inline Rational squared_norm(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline Rational squared_distance(const Vec2& a, const Vec2& b) { return squared_norm(a - b); }

/// Parses "p/q", "-3", or a finite decimal such as "2.6" exactly.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses "x,y" with each coordinate in parse_rational syntax.
Vec2 parse_vec2(std::string_view text);

/// Canonical "p/q" form (always with a denominator, lowest terms).
std::string to_string(const Rational& q);

/// Exact square root when q is the square of a rational; nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

double to_double(const Rational& q);

// Comparisons of the irrational quantity sqrt(squared) against a rational k,
// done without leaving the rationals.
inline bool sqrt_le(const Rational& squared, const Rational& k) { return k >= 0 && squared <= k * k; }
inline bool sqrt_lt(const Rational& squared, const Rational& k) { return k > 0 && squared < k * k; }
inline bool sqrt_ge(const Rational& squared, const Rational& k) { return k <= 0 || squared >= k * k; }
inline bool sqrt_gt(const Rational& squared, const Rational& k) { return k < 0 || squared > k * k; }

}  // namespace proxtopo
