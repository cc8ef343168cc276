#include "orbitcert/error.hpp"

namespace orbitcert {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InputError: return "INPUT_ERROR";
    case ErrorCode::PartitionSizeMismatch: return "PARTITION_SIZE_MISMATCH";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::EllDividesQ: return "ELL_DIVIDES_Q";
    case ErrorCode::EllNotDividing: return "ELL_NOT_DIVIDING";
    case ErrorCode::UnsupportedSeries: return "UNSUPPORTED_SERIES";
    case ErrorCode::NotAClique: return "NOT_A_CLIQUE";
    case ErrorCode::NoUniqueMinimum: return "NO_UNIQUE_MINIMUM";
    case ErrorCode::InvarianceViolation: return "INVARIANCE_VIOLATION";
    case ErrorCode::ActionViolation: return "ACTION_VIOLATION";
    case ErrorCode::RegularityFailure: return "REGULARITY_FAILURE";
    case ErrorCode::EmptyComplex: return "EMPTY_COMPLEX";
    case ErrorCode::HypothesisNotVerified: return "HYPOTHESIS_NOT_VERIFIED";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace orbitcert
