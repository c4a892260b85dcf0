#pragma once

#include <stdexcept>
#include <string>

namespace saseval {

enum class ErrorCode {
  OutOfRange,
  NoRatedEntries,
  EmptyLibrary,
  UnknownEntity,
};

/// Thrown by the analysis functions when a precondition is violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace saseval
