#include "foldcf/error.hpp"

namespace foldcf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::MalformedWord: return "MalformedWord";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::InvalidZ: return "InvalidZ";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::DigitBudgetExceeded: return "DigitBudgetExceeded";
    case Errc::StrongPropertyViolation: return "StrongPropertyViolation";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::CaseOutOfRange: return "CaseOutOfRange";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace foldcf
