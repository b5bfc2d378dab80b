#pragma once

#include <string>
#include <string_view>

#include "proxtopo/finite_space.hpp"

namespace proxtopo {

/// Parses a space file:
///   {"points": ["a","b","c"], "opens": [[],["a"],["a","b"],["a","b","c"]]}
/// with an optional "coordinates": {"a": "0,0", ...} object giving a planar
/// embedding for the metric proximity. Throws Error(ParseError) with a
/// line/column for malformed JSON, and for schema violations (duplicate
/// points or opens, unknown labels); topology violations surface as the
/// build_space error codes.
FiniteSpace parse_space(std::string_view text);
FiniteSpace load_space_file(const std::string& path);

/// Serializes back to the space-file format (opens in increasing mask order).
std::string dump_space(const FiniteSpace& space);

}  // namespace proxtopo
