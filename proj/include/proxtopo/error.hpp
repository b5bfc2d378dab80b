#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "proxtopo/subset.hpp"

namespace proxtopo {

enum class ErrorCode {
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  EmptySpace,
  SizeLimitExceeded,
  InvalidSubset,
  MissingCoordinates,
  UnsupportedKind,
  PreconditionFailed,
  NotOpen,
  IncompatibleProximity,
  NotT1,
  UnsupportedConfiguration,
  SetupInvalid,
  ParseError,
  UnknownKind,
  UnknownScenario,
  InvalidRegion,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<Subset> witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}
  ErrorCode code() const { return code_; }
  /// Subsets certifying the failure (e.g. the pair whose union is missing).
  const std::vector<Subset>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Subset> witness_;
};

}  // namespace proxtopo
