#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

enum class ErrorCode {
  SyntaxError,
  NotMarkov,
  DuplicateNode,
  DiscontinuousAtBase,
  MissingNode,
  BadPartition,
  NotALoop,
  NoCycle,
  NotAStarOrbit,
  BadRotationData,
  NotTrueOrbit,
  UnrepresentableTail,
  NotInDomain,
  InvalidArgument,
  Incomplete,
  Internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int line = 0);
  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace sigma
