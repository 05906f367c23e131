#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foldcf {

enum class Errc {
  ZeroDenominator,
  MalformedWord,
  EmptyWord,
  InvalidZ,
  DivisibilityViolation,
  DigitBudgetExceeded,
  StrongPropertyViolation,
  PrecisionExhausted,
  CaseOutOfRange,
  OracleMismatch,
  UnknownExample,
  InvalidSpec,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace foldcf
