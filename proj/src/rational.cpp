#include "proxtopo/rational.hpp"

#include <cctype>

#include "proxtopo/error.hpp"

namespace proxtopo {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
}

cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad(whole);
  cpp_int v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad(whole);
    v = v * 10 + (c - '0');
  }
  return v;
}

std::optional<cpp_int> exact_isqrt(const cpp_int& v) {
  if (v < 0) return std::nullopt;
  cpp_int r = boost::multiprecision::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(s.substr(0, slash), text);
    cpp_int den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) bad(text);
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    cpp_int whole = dot == 0 ? cpp_int(0) : parse_integer(s.substr(0, dot), text);
    cpp_int f = parse_integer(frac, text);
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(frac.size()));
    value = Rational(whole * scale + f, scale);
  } else {
    value = Rational(parse_integer(s, text));
  }
  return negative ? Rational(-value) : value;
}

Vec2 parse_vec2(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw Error(ErrorCode::ParseError, "expected 'x,y' but got '" + std::string(text) + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_isqrt(boost::multiprecision::numerator(q));
  auto den = exact_isqrt(boost::multiprecision::denominator(q));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace proxtopo
