#include "foldcf/exact.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "foldcf/error.hpp"

namespace foldcf {

std::string to_string(const Int& value) { return value.get_str(10); }

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(Errc::ParseError, "expected integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(Errc::ParseError, "expected integer, got '" + std::string(text) + "'");
    }
  }
  Int out(std::string(text.substr(i)), 10);
  if (text[0] == '-') out = -out;
  return out;
}

std::size_t decimal_digits(const Int& value) {
  if (value == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t guess = mpz_sizeinbase(value.get_mpz_t(), 10);
  Int bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, guess - 1);
  return abs(value) < bound ? guess - 1 : guess;
}

double log_abs(const Int& value) {
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

Rat Rat::make(Int num, Int den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "denominator is zero");
  Rat out(std::move(num), std::move(den), true);
  out.normalize();
  return out;
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Int Rat::floor() const {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return out;
}

std::string Rat::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rat Rat::operator-() const { return Rat(-num_, den_, true); }

Rat& Rat::operator+=(const Rat& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) throw Error(Errc::ZeroDenominator, "division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace foldcf
