#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bwc {

enum class ErrorCode {
  Overflow,
  DimensionMismatch,
  ZeroFunctional,
  NotIndivisible,
  OmegaDivisible,
  LengthMismatch,
  SpinParityClash,
  B2OutOfRange,
  B2PlusOutOfRange,
  B2PlusEven,
  IndexOutOfRange,
  Precondition,
  InconsistentDivisibility,
  NotIsomorphic,
  InternalConsistency,
  MalformedInput,
  Io,
  Usage,
};

/// Stable identifier used in machine-parsable error lines.
constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::ZeroFunctional: return "zero_functional";
    case ErrorCode::NotIndivisible: return "not_indivisible";
    case ErrorCode::OmegaDivisible: return "omega_divisible";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::SpinParityClash: return "spin_parity_clash";
    case ErrorCode::B2OutOfRange: return "b2_out_of_range";
    case ErrorCode::B2PlusOutOfRange: return "b2_plus_out_of_range";
    case ErrorCode::B2PlusEven: return "b2_plus_even";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::InconsistentDivisibility: return "inconsistent_divisibility";
    case ErrorCode::NotIsomorphic: return "not_isomorphic";
    case ErrorCode::InternalConsistency: return "internal_consistency";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bwc
