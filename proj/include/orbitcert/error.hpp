#pragma once

#include <stdexcept>
#include <string>

namespace orbitcert {

// Error codes exposed through the library and mapped to CLI exit codes.
enum class ErrorCode {
  InputError,          // malformed files, bad parameters
  PartitionSizeMismatch,
  BoundExceeded,       // enumeration/resource bounds
  EllDividesQ,
  EllNotDividing,
  UnsupportedSeries,
  NotAClique,
  NoUniqueMinimum,
  InvarianceViolation,
  ActionViolation,
  RegularityFailure,
  EmptyComplex,
  HypothesisNotVerified,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace orbitcert
