#include "earmap/errors.hpp"

namespace earmap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::NotCounterClockwise: return "NotCounterClockwise";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DegenerateChain: return "DegenerateChain";
    case ErrorCode::EmptyKernel: return "EmptyKernel";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::AngleCollision: return "AngleCollision";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::IndexMapMismatch: return "IndexMapMismatch";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::DegenerateSourceTriangle: return "DegenerateSourceTriangle";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace earmap
