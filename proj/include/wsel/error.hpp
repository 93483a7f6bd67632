#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsel {

enum class ErrorCode {
  duplicate_pair,
  missing_pair,
  self_pair,
  out_of_range_point,
  size_mismatch,
  size_limit,
  empty_subset,
  partition_invalid,
  not_a_topology,
  non_linear_gamma,
  component_has_max,
  internal_invariant_violation,
  unknown_suite,
  unknown_predicate,
  unsupported_format,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_pair: return "DuplicatePair";
    case ErrorCode::missing_pair: return "MissingPair";
    case ErrorCode::self_pair: return "SelfPair";
    case ErrorCode::out_of_range_point: return "OutOfRangePoint";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::size_limit: return "SizeLimit";
    case ErrorCode::empty_subset: return "EmptySubset";
    case ErrorCode::partition_invalid: return "PartitionInvalid";
    case ErrorCode::not_a_topology: return "NotATopology";
    case ErrorCode::non_linear_gamma: return "NonLinearGamma";
    case ErrorCode::component_has_max: return "ComponentHasMax";
    case ErrorCode::internal_invariant_violation: return "InternalInvariantViolation";
    case ErrorCode::unknown_suite: return "UnknownSuite";
    case ErrorCode::unknown_predicate: return "UnknownPredicate";
    case ErrorCode::unsupported_format: return "UnsupportedFormat";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace wsel
