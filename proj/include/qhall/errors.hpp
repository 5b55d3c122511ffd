#pragma once

#include <stdexcept>
#include <string>

namespace qhall {

/// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
  kOk = 0,
  kInvalidArgument = 1,
  kMixedField = 2,
  kDivisionByZero = 3,
  kCyclicQuiver = 4,
  kIncompatibleSeed = 5,
  kBoundExceeded = 6,
  kInconsistentCount = 7,
  kParse = 8,
  kUnknownLabel = 9,
  kNotRepresentationFinite = 10,
  kInternal = 11,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kMixedField: return "mixed-field";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kCyclicQuiver: return "cyclic-quiver";
    case ErrorCode::kIncompatibleSeed: return "incompatible-seed";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kInconsistentCount: return "inconsistent-count";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kUnknownLabel: return "unknown-label";
    case ErrorCode::kNotRepresentationFinite: return "not-representation-finite";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace qhall
