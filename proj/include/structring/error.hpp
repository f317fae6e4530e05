#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace structring {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  descriptor_mismatch,
  size_mismatch,
  size_limit,
  invalid_preorder,
  noncommutative_ring,
  unsupported_ring,
  not_a_unit,
  not_invertible,
  not_annihilating,
  constant_term_not_unit,
  not_nilpotent,
  infinite_ring,
  no_method_applicable,
  verification_failed,
  generation_failed,
  unsupported_combination,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::descriptor_mismatch: return "DescriptorMismatch";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::size_limit: return "SizeLimitExceeded";
    case ErrorCode::invalid_preorder: return "InvalidPreorder";
    case ErrorCode::noncommutative_ring: return "NoncommutativeRing";
    case ErrorCode::unsupported_ring: return "UnsupportedRing";
    case ErrorCode::not_a_unit: return "NotAUnit";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::not_annihilating: return "NotAnnihilating";
    case ErrorCode::constant_term_not_unit: return "ConstantTermNotUnit";
    case ErrorCode::not_nilpotent: return "NotNilpotent";
    case ErrorCode::infinite_ring: return "InfiniteRing";
    case ErrorCode::no_method_applicable: return "NoMethodApplicable";
    case ErrorCode::verification_failed: return "VerificationFailed";
    case ErrorCode::generation_failed: return "GenerationFailed";
    case ErrorCode::unsupported_combination: return "UnsupportedCombination";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; the message carries human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace structring
