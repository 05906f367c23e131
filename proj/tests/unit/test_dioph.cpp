#include <cmath>

#include "doctest.h"
#include "foldcf/builtin.hpp"
#include "foldcf/dioph.hpp"
#include "foldcf/error.hpp"

using foldcf::Int;
using foldcf::MuParams;
using foldcf::PseudoTerm;
using foldcf::Rat;
using foldcf::Recurrence;
using foldcf::Surd;

namespace {

MuParams params(double nu, double r, double s, double C = 0.0) {
  MuParams p;
  p.C = C;
  p.nu = nu;
  p.terms = {PseudoTerm{1, r, s}};
  return p;
}

bool within(double got, double want, double rel) { return std::abs(got - want) <= rel * want; }

}  // namespace

TEST_CASE("lambda_root") {
  CHECK(foldcf::lambda_root(Recurrence::A, 0, 0) == doctest::Approx(2 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(foldcf::lambda_root(Recurrence::B, 0, 0) == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(foldcf::lambda_root(Recurrence::A, 1, 0) == doctest::Approx(4.0));
}

TEST_CASE("closed forms") {
  const auto a = foldcf::lambda_root_closed(Recurrence::A, 0, 0);
  REQUIRE(a);
  CHECK(*a == Surd{Rat(Int(2)), Rat(Int(1)), Int(3)});
  CHECK(a->str() == "2+sqrt(3)");
  const auto b = foldcf::lambda_root_closed(Recurrence::B, 0, 0);
  REQUIRE(b);
  CHECK(*b == Surd{Rat(Int(1)), Rat(Int(1)), Int(2)});
  const auto c = foldcf::lambda_root_closed(Recurrence::A, 1, 0);
  REQUIRE(c);
  CHECK(c->value() == doctest::Approx(4.0));
  CHECK_FALSE(foldcf::lambda_root_closed(Recurrence::A, 0.3, 0));
}

TEST_CASE("mu_predicted") {
  auto m = foldcf::mu_predicted(Recurrence::A, params(2, 0, 0, 1));
  CHECK(m.mu == doctest::Approx(2 + std::sqrt(3.0)));
  REQUIRE(m.closed);
  CHECK(m.closed->str() == "2+sqrt(3)");
  m = foldcf::mu_predicted(Recurrence::B, params(10, 0, 0, 1));
  CHECK(m.mu == doctest::Approx(10.0));
  m = foldcf::mu_predicted(Recurrence::B, params(1, 1, 2, 1));
  CHECK(m.mu == doctest::Approx(2 + std::sqrt(6.0)));
  REQUIRE(m.closed);
  CHECK(m.closed->str() == "2+sqrt(6)");
  // with C = 0 the exponential factor is absent and nu has no effect
  m = foldcf::mu_predicted(Recurrence::B, params(10, 0, 0, 0));
  CHECK(m.mu == doctest::Approx(1 + std::sqrt(2.0)));
}

TEST_CASE("mu_predicted is monotone in r and s") {
  for (Recurrence f : {Recurrence::A, Recurrence::B}) {
    double last = 0;
    for (double t = 0; t <= 5; t += 0.25) {
      const double v = foldcf::mu_predicted(f, params(1, t, t)).mu;
      CHECK(v >= last);
      last = v;
    }
  }
}

TEST_CASE("estimator on the Luroth families") {
  const auto lur = foldcf::mu_estimate(foldcf::builtin_example("lur1"), 8);
  CHECK(lur.generic);
  REQUIRE(lur.predicted);
  CHECK(lur.predicted->mu == doctest::Approx(2 + std::sqrt(3.0)));
  CHECK(within(lur.estimate, 2 + std::sqrt(3.0), 0.05));
  CHECK(lur.estimate == doctest::Approx(1 + lur.window_max));
  CHECK(lur.log_q.size() == lur.stage_lengths.back() + 1);

  const auto alt = foldcf::mu_estimate(foldcf::builtin_example("altlur2"), 8);
  CHECK(within(alt.estimate, 1 + std::sqrt(2.0), 0.05));
  CHECK_FALSE(alt.generic);
}

TEST_CASE("estimator on the Kempner number") {
  const auto r = foldcf::mu_estimate(foldcf::builtin_example("kempner:2"), 10);
  CHECK_FALSE(r.predicted);
  CHECK(within(r.estimate, 2.0, 0.10));
}

TEST_CASE("landmarks and windows") {
  const auto r = foldcf::mu_estimate(foldcf::builtin_example("lur1"), 6);
  REQUIRE(r.landmarks.size() == 5);
  CHECK(r.landmarks.front().n == 2);
  // the big partial quotient z_n - 1 lands right after the folded prefix
  CHECK(r.landmarks[1].index == r.stage_lengths[1] + 1);
  CHECK(foldcf::default_window_start({1, 4, 10, 22, 46, 94}) == 10);
  const auto w = foldcf::mu_estimate(foldcf::builtin_example("lur1"), 6, std::size_t{1});
  CHECK(w.window_start == 1);
  CHECK(w.window_max >= r.window_max);
  CHECK_THROWS_AS(foldcf::mu_estimate(foldcf::builtin_example("lur1"), 4, std::size_t{500}), foldcf::Error);
}
