#pragma once

/**
 * @file exact.hpp
 * @brief Unbounded integers and exact rationals.
 *
 * Int is GMP's mpz_class. Rat keeps its value in canonical form at all
 * times:
 * - gcd(|num|, den) == 1
 * - den >= 1 (the sign lives in the numerator)
 * - zero is 0/1
 *
 * Both types are plain values with no shared state.
 */

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace foldcf {

using Int = mpz_class;

std::string to_string(const Int& value);

/// Parses an optionally signed decimal string. Throws Error(ParseError).
Int parse_int(std::string_view text);

/// Number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const Int& value);

/// Natural logarithm of |value| for value != 0, accurate to ~1e-15 relative
/// even when the integer has millions of digits.
double log_abs(const Int& value);

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  explicit Rat(Int integer) : num_(std::move(integer)), den_(1) {}

  /// num/den in lowest terms. Throws Error(ZeroDenominator) when den == 0.
  static Rat make(Int num, Int den);

  /// Accepts "p/q" or "p".
  static Rat parse(std::string_view text);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  Int floor() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  Rat(Int num, Int den, bool /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Int num_;
  Int den_;
};

}  // namespace foldcf
