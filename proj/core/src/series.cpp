#include "foldcf/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <utility>

#include "foldcf/alpha.hpp"
#include "foldcf/error.hpp"

namespace foldcf {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 8> kVariantNames{{
    {Variant::EngelA, "EngelA"},
    {Variant::EngelB, "EngelB"},
    {Variant::LurothA, "LurothA"},
    {Variant::LurothB, "LurothB"},
    {Variant::AltLurothA, "AltLurothA"},
    {Variant::AltLurothB, "AltLurothB"},
    {Variant::IndependentUV, "IndependentUV"},
    {Variant::ExplicitX, "ExplicitX"},
}};

Error invalid(const std::string& what) { return Error(Errc::InvalidSpec, what); }

}  // namespace

std::string_view variant_name(Variant v) noexcept {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (const auto& [variant, n] : kVariantNames) {
    if (n == name) return variant;
  }
  throw invalid("unknown variant '" + std::string(name) + "'");
}

std::optional<Recurrence> recurrence_of(Variant v) noexcept {
  switch (v) {
    case Variant::EngelA:
    case Variant::LurothA:
    case Variant::AltLurothA:
      return Recurrence::A;
    case Variant::EngelB:
    case Variant::LurothB:
    case Variant::AltLurothB:
      return Recurrence::B;
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// SignSeq / IntSeq

SignSeq SignSeq::list(std::vector<Sign> signs) {
  if (signs.empty()) throw invalid("sign list must not be empty");
  return SignSeq(Kind::List, std::move(signs));
}

SignSeq SignSeq::periodic(std::vector<Sign> pattern) {
  if (pattern.empty()) throw invalid("sign period must not be empty");
  return SignSeq(Kind::Periodic, std::move(pattern));
}

Sign SignSeq::at(long n) const {
  if (n < 2) return Sign::Plus;
  const auto offset = static_cast<std::size_t>(n - 2);
  switch (kind_) {
    case Kind::AllPlus: return Sign::Plus;
    case Kind::Alternating: return parity_sign(static_cast<std::size_t>(n - 1));
    case Kind::List: return entries_[std::min(offset, entries_.size() - 1)];
    case Kind::Periodic: return entries_[offset % entries_.size()];
  }
  return Sign::Plus;
}

IntSeq IntSeq::list(std::vector<Int> values) {
  if (values.empty()) throw invalid("integer list must not be empty");
  for (const Int& v : values) {
    if (v < 1) throw invalid("sequence entries must be positive, got " + to_string(v));
  }
  return IntSeq(Kind::List, std::move(values));
}

Int IntSeq::at(long index, long first_index) const {
  if (kind_ == Kind::Identity) return Int(index);
  if (index < first_index) throw invalid("sequence index " + std::to_string(index) + " precedes its first index");
  const auto offset = static_cast<std::size_t>(index - first_index);
  return values_[std::min(offset, values_.size() - 1)];
}

// ---------------------------------------------------------------------------
// MuParams

void MuParams::validate() const {
  if (!(std::isfinite(C) && C >= 0.0)) throw invalid("C must be finite and >= 0");
  if (!(std::isfinite(nu) && nu > 0.0)) throw invalid("nu must be finite and > 0");
  if (terms.empty()) throw invalid("pseudo-polynomial needs at least one term");
  std::set<std::pair<double, double>> seen;
  for (const PseudoTerm& t : terms) {
    if (!(std::isfinite(t.c) && t.c > 0.0)) throw invalid("coefficients c must be finite and > 0");
    if (!(std::isfinite(t.r) && t.r >= 0.0 && std::isfinite(t.s) && t.s >= 0.0)) {
      throw invalid("exponents r, s must be finite and >= 0");
    }
    if (!seen.insert({t.r, t.s}).second) throw invalid("repeated exponent pair in pseudo-polynomial");
  }
}

double MuParams::r() const {
  double out = 0.0;
  for (const PseudoTerm& t : terms) out = std::max(out, t.r);
  return out;
}

double MuParams::s() const {
  double out = 0.0;
  for (const PseudoTerm& t : terms) out = std::max(out, t.s);
  return out;
}

// ---------------------------------------------------------------------------
// SeriesSpec

namespace {

void check_positive_seq(const IntSeq& seq, const char* name) {
  for (const Int& v : seq.values()) {
    if (v < 1) throw invalid(std::string(name) + " entries must be positive");
  }
}

bool is_luroth(Variant v) {
  return v == Variant::LurothA || v == Variant::LurothB || v == Variant::AltLurothA || v == Variant::AltLurothB;
}

}  // namespace

void SeriesSpec::validate() const {
  if (variant == Variant::ExplicitX) {
    if (const auto* list = std::get_if<std::vector<Int>>(&x)) {
      if (list->empty()) throw invalid("ExplicitX needs a non-empty x_list");
      for (const Int& v : *list) {
        if (v < 1) throw invalid("x_list entries must be positive");
      }
    } else if (std::get<KempnerX>(x).base < 2) {
      throw invalid("Kempner base must be >= 2");
    }
    return;
  }
  if (u1 < 1) throw invalid("u1 must be >= 1");
  if (variant == Variant::IndependentUV) {
    if (v1 < 1) throw invalid("v1 must be >= 1");
    check_positive_seq(beta, "beta");
    check_positive_seq(gamma, "gamma");
    return;
  }
  if (is_luroth(variant) && u1 < 2) throw invalid("Lüroth variants need u1 >= 2");
  if (m < 1) throw invalid("m must be >= 1");
  check_positive_seq(v, "v");
  if (const auto* seq = std::get_if<IntSeq>(&alpha)) {
    check_positive_seq(*seq, "alpha");
  } else {
    std::get<MuParams>(alpha).validate();
  }
}

std::size_t default_digit_budget() {
  if (const char* env = std::getenv("FOLDCF_DIGIT_BUDGET")) {
    Int parsed = parse_int(env);
    if (parsed < 1 || !parsed.fits_ulong_p()) throw invalid("FOLDCF_DIGIT_BUDGET must be a positive integer");
    return parsed.get_ui();
  }
  return 1'000'000;
}

// ---------------------------------------------------------------------------
// Generation

namespace {

constexpr double kLog10e = std::numbers::log10e;

double log10_of(const Int& v) { return log_abs(v) * kLog10e; }

// Refuses a value whose predicted decimal size exceeds the budget.
void guard(double predicted_log10, std::size_t budget, const char* what, long n) {
  if (!std::isfinite(predicted_log10) || predicted_log10 + 1.0 > static_cast<double>(budget)) {
    throw Error(Errc::DigitBudgetExceeded, std::string(what) + " at n=" + std::to_string(n) +
                                               " would need about " +
                                               (std::isfinite(predicted_log10)
                                                    ? std::to_string(static_cast<long long>(predicted_log10) + 1)
                                                    : std::string("infinitely many")) +
                                               " digits (budget " + std::to_string(budget) + ")");
  }
}

void guard_actual(const Int& v, std::size_t budget, const char* what, long n) {
  if (mpz_sizeinbase(v.get_mpz_t(), 10) > budget && decimal_digits(v) > budget) {
    throw Error(Errc::DigitBudgetExceeded, std::string(what) + " at n=" + std::to_string(n) + " has " +
                                               std::to_string(decimal_digits(v)) + " digits (budget " +
                                               std::to_string(budget) + ")");
  }
}

Int v_of(const SeriesSpec& spec, long n, const Int& u_n) {
  switch (spec.variant) {
    case Variant::LurothA:
    case Variant::LurothB:
      return u_n - 1;
    case Variant::AltLurothA:
    case Variant::AltLurothB:
      return u_n + 1;
    default:
      return spec.v.at(n, 1);
  }
}

Int alpha_at(const SeriesSpec& spec, long n, const Int& u_n, const Int& u_next) {
  if (const auto* seq = std::get_if<IntSeq>(&spec.alpha)) return seq->at(n, 1);
  return alpha_eval(std::get<MuParams>(spec.alpha), n, u_n, u_next);
}

double alpha_log10(const SeriesSpec& spec, long n, const Int& u_n, const Int& u_next) {
  if (const auto* seq = std::get_if<IntSeq>(&spec.alpha)) return log10_of(seq->at(n, 1));
  return alpha_log10_estimate(std::get<MuParams>(spec.alpha), n, log_abs(u_n), log_abs(u_next));
}

Int exact_quotient(const Int& num, const Int& den) {
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// z_n = x_n / x_{n-1}^2, or StrongPropertyViolation.
Int direct_z(const Int& x_prev, const Int& x_n, long n) {
  Int sq = x_prev * x_prev;
  if (!mpz_divisible_p(x_n.get_mpz_t(), sq.get_mpz_t())) {
    throw Error(Errc::StrongPropertyViolation,
                "first failure at j=" + std::to_string(n) + ": x_" + std::to_string(n - 1) +
                    "^2 does not divide x_" + std::to_string(n));
  }
  return exact_quotient(x_n, sq);
}

void expect_same_z(const Int& direct, const Int& closed, long n) {
  if (direct != closed) {
    throw Error(Errc::OracleMismatch, "z_" + std::to_string(n) + ": direct " + to_string(direct) +
                                          " != closed form " + to_string(closed));
  }
}

std::vector<SeriesState> gen_recurrence(const SeriesSpec& spec, long count, std::size_t budget) {
  const Recurrence rec = *recurrence_of(spec.variant);
  std::vector<SeriesState> out;
  out.reserve(static_cast<std::size_t>(count));

  // u[i] holds u_{i+1}.
  std::vector<Int> u{spec.u1};
  const Int v1 = v_of(spec, 1, spec.u1);
  u.push_back(rec == Recurrence::A ? Int(spec.m * spec.u1 * spec.u1 * v1) : Int(spec.m * spec.u1));
  guard_actual(u.back(), budget, "u", 2);

  Int rho = spec.m;
  for (long n = 1; n <= count; ++n) {
    SeriesState st;
    st.n = n;
    st.u = u[n - 1];
    st.u_next = u[n];
    st.v = v_of(spec, n, *st.u);
    st.rho = rho;

    if (n == 1) {
      st.x = spec.u1;
      st.z = st.x;
    } else {
      const SeriesState& prev = out.back();
      guard(log10_of(prev.x) + log10_of(*st.u) + log10_of(*prev.v), budget, "x", n);
      st.x = prev.x * *st.u * *prev.v;
      st.z = direct_z(prev.x, st.x, n);
      Int closed = rec == Recurrence::A ? Int(*prev.u * *prev.v * *prev.v * *prev.rho) : Int(*prev.v * *prev.rho);
      expect_same_z(st.z, closed, n);
    }

    if (n < count) {
      // u_{n+2} feeds state n+1.
      const Int& u_n = *st.u;
      const Int& u_next = *st.u_next;
      const Int v_next = v_of(spec, n + 1, u_next);
      double predicted = alpha_log10(spec, n, u_n, u_next) +
                         (rec == Recurrence::A ? 3.0 * log10_of(u_next) + log10_of(v_next) - log10_of(u_n)
                                               : 2.0 * log10_of(u_next) + log10_of(*st.v));
      guard(predicted, budget, "u", n + 2);
      st.alpha = alpha_at(spec, n, u_n, u_next);
      u.push_back(step_u(spec, n, u_n, u_next, *st.alpha));
      guard_actual(u.back(), budget, "u", n + 2);
      rho *= *st.alpha;
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<SeriesState> gen_independent(const SeriesSpec& spec, long count, std::size_t budget) {
  std::vector<SeriesState> out;
  out.reserve(static_cast<std::size_t>(count));
  Int u_n = spec.u1;
  Int v_n = spec.v1;
  Int prod_u = 1;  // prod_{k<n} u_k
  Int prod_v = 1;
  Int prod_uv = 1;
  double log10_prod_u = 0.0;
  for (long n = 1; n <= count; ++n) {
    SeriesState st;
    st.n = n;
    st.u = u_n;
    st.v = v_n;
    st.x = u_n * prod_uv;
    if (n == 1) {
      st.z = st.x;
    } else {
      st.z = direct_z(out.back().x, st.x, n);
      Int closed = n == 2 ? spec.beta.at(2, 2) * spec.v1 : spec.beta.at(n, 2) * spec.gamma.at(n - 1, 2);
      expect_same_z(st.z, closed, n);
    }

    prod_u *= u_n;
    prod_v *= v_n;
    prod_uv *= u_n * v_n;
    log10_prod_u += log10_of(u_n);
    const Int beta = spec.beta.at(n + 1, 2);
    guard(log10_of(beta) + log10_prod_u, budget, "u", n + 1);
    Int u_next = beta * prod_u;
    Int v_next = spec.gamma.at(n + 1, 2) * prod_v;
    guard_actual(v_next, budget, "v", n + 1);
    st.u_next = u_next;
    out.push_back(std::move(st));
    u_n = std::move(u_next);
    v_n = std::move(v_next);
  }
  return out;
}

std::vector<SeriesState> gen_explicit(const SeriesSpec& spec, long count, std::size_t budget) {
  std::vector<SeriesState> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto* list = std::get_if<std::vector<Int>>(&spec.x);
  if (list != nullptr && static_cast<std::size_t>(count) > list->size()) {
    throw invalid("x_list has only " + std::to_string(list->size()) + " entries, " + std::to_string(count) +
                  " requested");
  }
  for (long n = 1; n <= count; ++n) {
    SeriesState st;
    st.n = n;
    if (list != nullptr) {
      st.x = (*list)[static_cast<std::size_t>(n - 1)];
      guard_actual(st.x, budget, "x", n);
    } else {
      const Int& base = std::get<KempnerX>(spec.x).base;
      guard(std::ldexp(log10_of(base), static_cast<int>(n - 1)), budget, "x", n);
      if (n == 1) {
        st.x = base;
      } else {
        st.x = out.back().x * out.back().x;
      }
    }
    if (n == 1) {
      st.z = st.x;
    } else {
      st.z = direct_z(out.back().x, st.x, n);
      if (list == nullptr) expect_same_z(st.z, Int(1), n);
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace

Int step_u(const SeriesSpec& spec, long n, const Int& u_n, const Int& u_next, const Int& alpha_n) {
  const auto rec = recurrence_of(spec.variant);
  if (!rec) throw invalid(std::string(variant_name(spec.variant)) + " has no u-recurrence");
  if (*rec == Recurrence::B) return alpha_n * u_next * u_next * v_of(spec, n, u_n);

  Int num = alpha_n * u_next * u_next * u_next * v_of(spec, n + 1, u_next);
  if (!mpz_divisible_p(num.get_mpz_t(), u_n.get_mpz_t())) {
    throw Error(Errc::DivisibilityViolation,
                "u_" + std::to_string(n) + " does not divide alpha u_{n+1}^3 v_{n+1} at n=" + std::to_string(n));
  }
  return exact_quotient(num, u_n);
}

std::vector<SeriesState> gen_sequences(const SeriesSpec& spec, long count, const GenOptions& opts) {
  spec.validate();
  if (count < 1) throw invalid("number of terms must be >= 1");
  switch (spec.variant) {
    case Variant::IndependentUV: return gen_independent(spec, count, opts.digit_budget);
    case Variant::ExplicitX: return gen_explicit(spec, count, opts.digit_budget);
    default: return gen_recurrence(spec, count, opts.digit_budget);
  }
}

std::vector<Int> strong_check(std::span<const Int> x) {
  if (x.empty()) throw invalid("strong_check needs at least one term");
  std::vector<Int> z;
  z.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 1) throw invalid("x entries must be positive");
    if (j == 0) {
      z.push_back(x[0]);
    } else {
      z.push_back(direct_z(x[j - 1], x[j], static_cast<long>(j + 1)));
    }
  }
  return z;
}

Rat series_prefix(const SeriesSpec& spec, const Int& x1) {
  if (spec.prefix) return *spec.prefix;
  return Rat::make(Int(1), x1);
}

Rat partial_sum(const SeriesSpec& spec, std::span<const SeriesState> states, long n) {
  if (n < 1 || static_cast<std::size_t>(n) > states.size()) {
    throw invalid("partial_sum index " + std::to_string(n) + " outside generated range");
  }
  Rat sum = series_prefix(spec, states[0].x);
  for (long j = 2; j <= n; ++j) {
    sum += Rat::make(Int(to_int(spec.signs.at(j))), states[static_cast<std::size_t>(j - 1)].x);
  }
  return sum;
}

Rat partial_sum(const SeriesSpec& spec, long n, const GenOptions& opts) {
  auto states = gen_sequences(spec, n, opts);
  return partial_sum(spec, states, n);
}

}  // namespace foldcf
