#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idealtop {

enum class ErrorCode {
  BadMask,
  BadPoint,
  NotATopology,
  DimensionMismatch,
  CapExceeded,
  UnknownTheorem,
  UnknownHypothesisName,
  Parse,
  // An internal cross-check between two computation routes disagreed.
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace idealtop
