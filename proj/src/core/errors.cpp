#include "sigmaper/errors.hpp"

namespace sigma {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotMarkov: return "NotMarkov";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DiscontinuousAtBase: return "DiscontinuousAtBase";
    case ErrorCode::MissingNode: return "MissingNode";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::NotAStarOrbit: return "NotAStarOrbit";
    case ErrorCode::BadRotationData: return "BadRotationData";
    case ErrorCode::NotTrueOrbit: return "NotTrueOrbit";
    case ErrorCode::UnrepresentableTail: return "UnrepresentableTail";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

static std::string decorate(ErrorCode code, const std::string& what, int line) {
  std::string s = error_name(code);
  if (line > 0) s += " (line " + std::to_string(line) + ")";
  if (!what.empty()) s += ": " + what;
  return s;
}

Error::Error(ErrorCode code, const std::string& what, int line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace sigma
