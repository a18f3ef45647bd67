#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace earmap {

enum class ErrorCode {
  InvalidArgument,
  NotSimple,
  NotStrictlyConvex,
  NotCounterClockwise,
  SizeMismatch,
  TooFewVertices,
  InvalidCount,
  DegenerateTriangle,
  DegenerateChain,
  EmptyKernel,
  DegenerateRay,
  AngleCollision,
  MultiplicityMismatch,
  IndexMapMismatch,
  OutsideDomain,
  DegenerateSourceTriangle,
  ValidationFailed,
  IoError,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace earmap
