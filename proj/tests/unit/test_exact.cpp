#include <random>

#include "doctest.h"
#include "foldcf/error.hpp"
#include "foldcf/exact.hpp"
#include "oracle.hpp"

using foldcf::Errc;
using foldcf::Error;
using foldcf::Int;
using foldcf::Rat;

namespace {

Rat R(long p, long q) { return Rat::make(Int(p), Int(q)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected foldcf::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("make reduces to lowest terms with positive denominator") {
  CHECK(R(37, 108).str() == "37/108");
  CHECK(R(2, -4).num() == -1);
  CHECK(R(2, -4).den() == 2);
  CHECK(R(0, 7).num() == 0);
  CHECK(R(0, 7).den() == 1);
  CHECK(R(-6, -9) == R(2, 3));
  CHECK(code_of([] { R(1, 0); }) == Errc::ZeroDenominator);
}

TEST_CASE("addition") {
  CHECK(R(1, 3) + R(1, 108) == R(37, 108));
  CHECK(R(1, 2) + R(-1, 12) == R(5, 12));
  const Rat a = R(-17, 40);
  CHECK(a + Rat() == a);
}

TEST_CASE("ordering") {
  CHECK(R(1, 3) < R(37, 108));
  CHECK((R(5, 12) <=> R(5, 12)) == std::strong_ordering::equal);
  CHECK(R(-1, 2) < Rat());
  CHECK(R(7, 3) > R(2, 1));
}

TEST_CASE("arithmetic and floor") {
  CHECK(R(3, 4) * R(8, 9) == R(2, 3));
  CHECK(R(3, 4) / R(3, 8) == Rat(Int(2)));
  CHECK(R(3, 4) - R(3, 4) == Rat());
  CHECK(-R(3, 4) == R(-3, 4));
  CHECK(R(7, 2).floor() == 3);
  CHECK(R(-7, 2).floor() == -4);
  CHECK(code_of([] { R(1, 2) / Rat(); }) == Errc::ZeroDenominator);
}

TEST_CASE("parse and print") {
  CHECK(Rat::parse("37/108") == R(37, 108));
  CHECK(Rat::parse("-4/6") == R(-2, 3));
  CHECK(Rat::parse("5").str() == "5");
  CHECK(code_of([] { Rat::parse("1/0"); }) == Errc::ZeroDenominator);
  CHECK(code_of([] { Rat::parse("1/x"); }) == Errc::ParseError);
  CHECK(code_of([] { Rat::parse(""); }) == Errc::ParseError);
  CHECK(foldcf::parse_int("-123456789012345678901234567890") == Int("-123456789012345678901234567890"));
  CHECK(foldcf::parse_int("+7") == 7);
  CHECK(code_of([] { foldcf::parse_int("12a"); }) == Errc::ParseError);
  CHECK(code_of([] { foldcf::parse_int("-"); }) == Errc::ParseError);
}

TEST_CASE("digits and logs") {
  CHECK(foldcf::decimal_digits(Int(0)) == 1);
  CHECK(foldcf::decimal_digits(Int(9)) == 1);
  CHECK(foldcf::decimal_digits(Int(10)) == 2);
  CHECK(foldcf::decimal_digits(Int(-999)) == 3);
  Int big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 5000);
  CHECK(foldcf::decimal_digits(big) == 5001);
  CHECK(foldcf::log_abs(big) == doctest::Approx(5000 * std::log(10.0)).epsilon(1e-13));
  CHECK(foldcf::log_abs(Int(-1)) == 0.0);
}

TEST_CASE("field laws on random rationals agree with mpq") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const long ap = num(rng), aq = den(rng), bp = num(rng), bq = den(rng), cp = num(rng), cq = den(rng);
    const Rat a = R(ap, aq), b = R(bp, bq), c = R(cp, cq);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(R(ap * 7, aq * 7) == a);
    oracle::Q qa(ap, aq), qb(bp, bq);
    qa.canonicalize();
    qb.canonicalize();
    const oracle::Q sum = qa + qb;
    const Rat s = a + b;
    CHECK(s.num() == sum.get_num());
    CHECK(s.den() == sum.get_den());
    CHECK((a < b) == (qa < qb));
  }
}
