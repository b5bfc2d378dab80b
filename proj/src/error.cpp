#include "proxtopo/error.hpp"

namespace proxtopo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::IncompatibleProximity: return "IncompatibleProximity";
    case ErrorCode::NotT1: return "NotT1";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::SetupInvalid: return "SetupInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
  }
  return "Unknown";
}

}  // namespace proxtopo
