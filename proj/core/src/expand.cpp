#include "foldcf/expand.hpp"

#include <algorithm>

#include "foldcf/error.hpp"

namespace foldcf {

std::string_view length_case_name(LengthCase c) noexcept {
  switch (c) {
    case LengthCase::Generic: return "Generic";
    case LengthCase::SpecialEngelX1Eq2: return "SpecialEngelX1Eq2";
    case LengthCase::SpecialPierceX1Eq2: return "SpecialPierceX1Eq2";
    case LengthCase::NonApplicable: return "NonApplicable";
  }
  return "?";
}

namespace {

void require_states(std::span<const SeriesState> states, long n) {
  if (n < 1) throw Error(Errc::InvalidSpec, "stage index must be >= 1");
  if (states.size() < static_cast<std::size_t>(n)) {
    throw Error(Errc::InvalidSpec, "only " + std::to_string(states.size()) + " states for stage " + std::to_string(n));
  }
}

Rat checked_prefix(const SeriesSpec& spec, std::span<const SeriesState> states) {
  Rat prefix = series_prefix(spec, states[0].x);
  if (!mpz_divisible_p(states[0].x.get_mpz_t(), prefix.den().get_mpz_t())) {
    throw Error(Errc::InvalidSpec, "prefix denominator " + to_string(prefix.den()) + " does not divide x_1 = " +
                                       to_string(states[0].x));
  }
  return prefix;
}

Int divide_exact(const Int& num, const Int& den) {
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

Int stage_z(const SeriesSpec& spec, std::span<const SeriesState> states, long n) {
  require_states(states, n);
  if (n < 2) throw Error(Errc::InvalidSpec, "stage_z is defined for n >= 2");
  if (n > 2) return states[static_cast<std::size_t>(n - 1)].z;
  const Int q = checked_prefix(spec, states).den();
  return divide_exact(states[1].x, q * q);
}

std::vector<StageRecord> fold_stages(const SeriesSpec& spec, std::span<const SeriesState> states, long n) {
  require_states(states, n);
  std::vector<StageRecord> out;
  out.reserve(static_cast<std::size_t>(n));

  StageRecord first;
  first.n = 1;
  first.cf = cf_from_rational(checked_prefix(spec, states));
  first.length = first.cf.length();
  out.push_back(std::move(first));

  for (long j = 2; j <= n; ++j) {
    const CF& current = out.back().cf;
    const Int z = stage_z(spec, states, j);
    const Sign sign = spec.signs.at(j) * parity_sign(current.length());
    FoldResult folded = current.word.empty() ? fold_integer(current.a0, z, sign) : fold(current, z, sign);
    StageRecord rec;
    rec.n = j;
    rec.cf = std::move(folded.cf);
    rec.step = std::move(folded.step);
    rec.length = rec.cf.length();
    out.push_back(std::move(rec));
  }
  return out;
}

Expansion expand_states(const SeriesSpec& spec, std::vector<SeriesState> states, long n) {
  Expansion out;
  auto stages = fold_stages(spec, states, n);
  out.trace.k = stages.front().length;
  out.trace.length_case = classify_case(spec, std::span<const SeriesState>(states).first(static_cast<std::size_t>(n)));

  Rat sum;
  for (StageRecord& rec : stages) {
    sum = rec.n == 1 ? series_prefix(spec, states[0].x)
                     : sum + Rat::make(Int(to_int(spec.signs.at(rec.n))), states[static_cast<std::size_t>(rec.n - 1)].x);
    rec.value_matches = cf_value(rec.cf) == sum;
    if (!rec.value_matches) {
      throw Error(Errc::OracleMismatch, "folded expansion at n=" + std::to_string(rec.n) +
                                            " does not evaluate to the partial sum " + sum.str());
    }
    rec.predicted_length = expected_length(out.trace.k, rec.n, out.trace.length_case);
  }
  out.cf = stages.back().cf;
  out.trace.stages = std::move(stages);
  out.states = std::move(states);
  return out;
}

Expansion expand_series(const SeriesSpec& spec, long n, const GenOptions& opts) {
  return expand_states(spec, gen_sequences(spec, n, opts), n);
}

std::size_t predict_length(std::size_t k, long n, LengthCase c) {
  if (n < 1 || n > 60) throw Error(Errc::CaseOutOfRange, "n=" + std::to_string(n) + " outside 1..60");
  const std::size_t pow = std::size_t{1} << (n - 1);  // 2^(n-1)
  switch (c) {
    case LengthCase::Generic:
      return (k + 2) * pow - 2;
    case LengthCase::SpecialEngelX1Eq2:
    case LengthCase::SpecialPierceX1Eq2:
      if (n < 3) throw Error(Errc::CaseOutOfRange, "x1 = 2 length formulas need n >= 3");
      return c == LengthCase::SpecialEngelX1Eq2 ? 5 * (pow / 2) : 5 * (pow / 2) - 2;
    case LengthCase::NonApplicable:
      break;
  }
  throw Error(Errc::CaseOutOfRange, "no length formula for a non-applicable case");
}

std::optional<std::size_t> expected_length(std::size_t k, long n, LengthCase c) {
  if (c == LengthCase::NonApplicable || n < 1 || n > 60) return std::nullopt;
  if (c != LengthCase::Generic && n < 3) return predict_length(k, n, LengthCase::Generic);
  return predict_length(k, n, c);
}

LengthCase classify_case(const SeriesSpec& spec, std::span<const SeriesState> states) {
  if (states.empty()) throw Error(Errc::InvalidSpec, "classification needs at least one state");
  const CF prefix = cf_from_rational(checked_prefix(spec, states));
  const std::size_t k = prefix.length();
  const auto depth = static_cast<long>(states.size());

  bool all_z_above_one = true;
  for (long j = 2; j <= depth; ++j) all_z_above_one = all_z_above_one && stage_z(spec, states, j) > 1;
  if (k == 0 || !all_z_above_one) return LengthCase::NonApplicable;

  const Int& a1 = prefix.word.front();
  if (k == 1 ? a1 > 2 : a1 > 1) return LengthCase::Generic;

  if (k == 1 && a1 == 2) {
    bool plus = true;
    bool alternating = true;
    for (long j = 2; j <= std::max(depth, 6L); ++j) {
      plus = plus && spec.signs.at(j) == Sign::Plus;
      alternating = alternating && spec.signs.at(j) == parity_sign(static_cast<std::size_t>(j - 1));
    }
    if (plus) return LengthCase::SpecialEngelX1Eq2;
    if (alternating) return LengthCase::SpecialPierceX1Eq2;
  }
  return LengthCase::NonApplicable;
}

LengthCase classify_case(const SeriesSpec& spec, long depth, const GenOptions& opts) {
  return classify_case(spec, gen_sequences(spec, depth, opts));
}

bool determinant_identity_holds(const CF& cf) {
  const auto conv = convergents(cf);
  for (std::size_t i = 1; i < conv.size(); ++i) {
    const Convergent& cur = conv[i];
    const Convergent& prev = conv[i - 1];
    const Int det = cur.p * prev.q - prev.p * cur.q;
    // (-1)^(j-1) with j = cur.index
    const int expected = (cur.index - 1) % 2 == 0 ? 1 : -1;
    if (det != expected) return false;
  }
  return true;
}

VerifyReport verify_expansion(const SeriesSpec& spec, long n_max, const GenOptions& opts) {
  VerifyReport report;
  const auto states = gen_sequences(spec, n_max, opts);
  const auto stages = fold_stages(spec, states, n_max);
  report.k = stages.front().length;
  report.length_case = classify_case(spec, states);

  Rat sum;
  for (const StageRecord& rec : stages) {
    const std::string at = "n=" + std::to_string(rec.n) + ": ";
    sum = rec.n == 1 ? series_prefix(spec, states[0].x)
                     : sum + Rat::make(Int(to_int(spec.signs.at(rec.n))), states[static_cast<std::size_t>(rec.n - 1)].x);
    StageCheck check;
    check.n = rec.n;
    check.actual_length = rec.length;
    check.value_ok = cf_value(rec.cf) == sum;
    if (!check.value_ok) report.failures.push_back(at + "folded value differs from the partial sum");
    check.word_ok = canonicalize(rec.cf) == cf_from_rational(sum);
    if (!check.word_ok) report.failures.push_back(at + "folded word differs from the Euclidean expansion");
    check.determinant_ok = determinant_identity_holds(rec.cf);
    if (!check.determinant_ok) report.failures.push_back(at + "determinant identity fails");
    check.predicted_length = expected_length(report.k, rec.n, report.length_case);
    if (check.predicted_length) {
      check.length_ok = *check.predicted_length == rec.length;
      if (!*check.length_ok) {
        report.failures.push_back(at + "length " + std::to_string(rec.length) + " but predicted " +
                                  std::to_string(*check.predicted_length));
      }
    }
    report.stages.push_back(std::move(check));
  }
  return report;
}

std::vector<std::size_t> coefficient_census(const CF& cf, std::span<const SeriesState> states, long n) {
  require_states(states, n);
  std::vector<std::size_t> out;
  for (long j = 2; j <= n; ++j) {
    const Int target = states[static_cast<std::size_t>(j - 1)].z - 1;
    out.push_back(static_cast<std::size_t>(std::count(cf.word.begin(), cf.word.end(), target)));
  }
  return out;
}

}  // namespace foldcf
