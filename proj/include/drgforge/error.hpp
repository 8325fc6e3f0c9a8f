#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drgforge {

enum class ErrorCode {
  InvalidParameter,
  MixedGroups,
  ModulusMismatch,
  NotADivisor,
  NotAUnit,
  IdentityInSet,
  NotInverseClosed,
  BadClosure,
  ZeroInR,
  EmptyConnection,
  Disconnected,
  NotRegular,
  NotBipartite,
  NotAntipodal,
  NotNormal,
  InvalidArray,
  NotASubset,
  NotASubgroupChain,
  TooLarge,
  StructuralViolation,
  UnsupportedN,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// contract was violated. Everything except `Internal` is an input error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drgforge
