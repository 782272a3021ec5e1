#pragma once

#include <stdexcept>
#include <string>

namespace ellperim {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  Tolerance,
};

// Thrown for precondition violations and unreachable tolerances. The C API
// maps the code onto elp_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ellperim
