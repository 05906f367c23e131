#pragma once

/**
 * @file series.hpp
 * @brief Integer sequences behind strong Engel series with signs.
 *
 * A series 1/x_1 + sum_{j>=2} eps_j / x_j has the strong property when
 * x_j^2 divides x_{j+1}; its fold parameters are z_1 = x_1 and
 * z_{j+1} = x_{j+1} / x_j^2. The families generated here build x_j from
 * auxiliary sequences (u_n), (v_n):
 *
 *   x_1 = u_1,  x_{j+1} = x_j * u_{j+1} * v_j
 *
 * with (u_n) driven by one of two second-order recurrences
 *
 *   A:  u_{n+2} u_n = alpha_n u_{n+1}^3 v_{n+1},   u_2 = m u_1^2 v_1
 *   B:  u_{n+2}     = alpha_n u_{n+1}^2 v_n,       u_2 = m u_1
 *
 * (Lüroth: v = u - 1, alternating Lüroth: v = u + 1, Engel: v given), or by
 * the independent products u_n = beta_n prod u_k, v_n = gamma_n prod v_k.
 * The closed forms z_{n+1} = u_n v_n^2 rho_n (A) and z_{n+1} = v_n rho_n (B),
 * with rho_1 = m and rho_{n+1} = alpha_n rho_n, are checked against the direct
 * quotient for every generated state.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foldcf/exact.hpp"
#include "foldcf/fold.hpp"

namespace foldcf {

enum class Variant {
  EngelA,
  EngelB,
  LurothA,
  LurothB,
  AltLurothA,
  AltLurothB,
  IndependentUV,
  ExplicitX,
};

std::string_view variant_name(Variant v) noexcept;
Variant parse_variant(std::string_view name);

enum class Recurrence { A, B };

/// A or B for the recurrence-driven variants, nullopt otherwise.
std::optional<Recurrence> recurrence_of(Variant v) noexcept;

/// Signs eps_n for n >= 2. List and Periodic entries are indexed from n = 2;
/// a List repeats its last entry once exhausted.
class SignSeq {
 public:
  enum class Kind { AllPlus, Alternating, List, Periodic };

  static SignSeq all_plus() { return SignSeq(Kind::AllPlus, {}); }
  /// eps_n = (-1)^(n-1): +, -, +, ... counting from eps_1 = +1.
  static SignSeq alternating() { return SignSeq(Kind::Alternating, {}); }
  static SignSeq list(std::vector<Sign> signs);
  static SignSeq periodic(std::vector<Sign> pattern);

  Sign at(long n) const;
  Kind kind() const noexcept { return kind_; }
  const std::vector<Sign>& entries() const noexcept { return entries_; }

  friend bool operator==(const SignSeq&, const SignSeq&) = default;

 private:
  SignSeq(Kind kind, std::vector<Sign> entries) : kind_(kind), entries_(std::move(entries)) {}

  Kind kind_;
  std::vector<Sign> entries_;
};

/// Positive integer sequence: an explicit list (last entry repeated when
/// exhausted) or the identity n -> n.
class IntSeq {
 public:
  enum class Kind { List, Identity };

  IntSeq() : IntSeq(Kind::List, {Int(1)}) {}
  static IntSeq constant(Int value) { return IntSeq(Kind::List, {std::move(value)}); }
  static IntSeq list(std::vector<Int> values);
  static IntSeq identity() { return IntSeq(Kind::Identity, {}); }

  /// Value at `index`, counting list entries from `first_index`.
  Int at(long index, long first_index) const;
  Kind kind() const noexcept { return kind_; }
  const std::vector<Int>& values() const noexcept { return values_; }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;

 private:
  IntSeq(Kind kind, std::vector<Int> values) : kind_(kind), values_(std::move(values)) {}

  Kind kind_;
  std::vector<Int> values_;
};

/// One term c * X^r * Y^s of a pseudo-polynomial.
struct PseudoTerm {
  double c = 1.0;
  double r = 0.0;
  double s = 0.0;
  friend bool operator==(const PseudoTerm&, const PseudoTerm&) = default;
};

/// alpha_n = ceil(exp(C nu^n) * sum c X^r Y^s) evaluated at (u_n, u_{n+1}).
/// C = 0 is accepted (the exponential factor is then 1).
struct MuParams {
  double C = 0.0;
  double nu = 1.0;
  std::vector<PseudoTerm> terms{PseudoTerm{}};

  /// Throws Error(InvalidSpec) unless C >= 0, nu > 0, every c > 0, every
  /// exponent >= 0 and finite, and no (r, s) pair repeats.
  void validate() const;
  /// Largest X exponent.
  double r() const;
  /// Largest Y exponent.
  double s() const;

  friend bool operator==(const MuParams&, const MuParams&) = default;
};

/// alpha_n is either taken from a list (alpha_1, alpha_2, ...) or evaluated
/// from a pseudo-polynomial.
using AlphaSource = std::variant<IntSeq, MuParams>;

/// x_n = u^(2^(n-1)).
struct KempnerX {
  Int base;
  friend bool operator==(const KempnerX&, const KempnerX&) = default;
};
using XSource = std::variant<std::vector<Int>, KempnerX>;

struct SeriesSpec {
  Variant variant = Variant::LurothA;
  Int u1{3};
  Int m{1};
  AlphaSource alpha{IntSeq::constant(Int(1))};
  IntSeq v;      // EngelA/EngelB: v_1, v_2, ...
  Int v1{1};     // IndependentUV
  IntSeq beta;   // IndependentUV: beta_2, beta_3, ...
  IntSeq gamma;  // IndependentUV: gamma_2, gamma_3, ...
  XSource x = std::vector<Int>{};  // ExplicitX
  SignSeq signs = SignSeq::all_plus();
  std::optional<Rat> prefix;  // defaults to 1/x_1

  /// Throws Error(InvalidSpec) on parameter violations.
  void validate() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

struct SeriesState {
  long n = 0;
  std::optional<Int> u;       // u_n
  std::optional<Int> u_next;  // u_{n+1}
  std::optional<Int> v;       // v_n
  Int x;                      // x_n
  std::optional<Int> rho;     // rho_n
  std::optional<Int> alpha;   // alpha_n, used to produce u_{n+2}
  Int z;                      // z_n (z_1 = x_1)
};

struct GenOptions {
  /// Largest number of decimal digits any generated integer may have.
  std::size_t digit_budget = 1'000'000;
};

/// The default digit budget, overridden by FOLDCF_DIGIT_BUDGET when set.
std::size_t default_digit_budget();

/// u_{n+2} from u_n, u_{n+1} and alpha_n for the recurrence variants.
/// Throws Error(DivisibilityViolation) when an A-recurrence quotient is not
/// exact, and Error(InvalidSpec) for variants without a recurrence.
Int step_u(const SeriesSpec& spec, long n, const Int& u_n, const Int& u_next, const Int& alpha_n);

/// States 1..count. Throws Error(DigitBudgetExceeded) before building a state
/// predicted to exceed the budget, Error(StrongPropertyViolation) when some
/// x_{n-1}^2 does not divide x_n, and Error(OracleMismatch) when the direct
/// and closed-form z disagree.
std::vector<SeriesState> gen_sequences(const SeriesSpec& spec, long count, const GenOptions& opts = {});

/// z_1 = x_1, z_{j+1} = x_{j+1} / x_j^2. Throws Error(StrongPropertyViolation)
/// naming the first (1-based) index that fails.
std::vector<Int> strong_check(std::span<const Int> x);

/// The series' rational starting term p/q: spec.prefix or 1/x_1.
Rat series_prefix(const SeriesSpec& spec, const Int& x1);

/// prefix + sum_{j=2}^{n} eps_j / x_j.
Rat partial_sum(const SeriesSpec& spec, long n, const GenOptions& opts = {});
Rat partial_sum(const SeriesSpec& spec, std::span<const SeriesState> states, long n);

}  // namespace foldcf
