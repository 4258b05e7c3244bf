#ifndef NASHFAN_ERRORS_HPP
#define NASHFAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nashfan {

enum class ErrorCode {
  InvalidCone,
  NotFullDimensional,
  InvalidWeight,
  WeightOutsideSigma,
  InvalidOrdering,
  NotInSemigroup,
  ZeroPolynomial,
  ContextMismatch,
  QuotientNotFinite,
  PairQueueExhausted,
  SweepStalled,
  DualNotNonnegative,
  InvalidArgument,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCone: return "InvalidCone";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::WeightOutsideSigma: return "WeightOutsideSigma";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::QuotientNotFinite: return "QuotientNotFinite";
    case ErrorCode::PairQueueExhausted: return "PairQueueExhausted";
    case ErrorCode::SweepStalled: return "SweepStalled";
    case ErrorCode::DualNotNonnegative: return "DualNotNonnegative";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nashfan

#endif  // NASHFAN_ERRORS_HPP
