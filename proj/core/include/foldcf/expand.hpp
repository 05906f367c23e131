#pragma once

/**
 * @file expand.hpp
 * @brief Continued fractions of partial sums by iterated folding.
 *
 * With S_1 = p/q = [a0; a1..ak] and S_n = S_{n-1} + eps_n / x_n, each stage
 * applies fold(S_{n-1}, z, eps_n * (-1)^length(S_{n-1})) where
 * z = x_n / q_{n-1}^2. For n >= 3 the current length is always even and the
 * sign is eps_n itself; the parity correction only matters for the first
 * fold when k is odd.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldcf/cf.hpp"
#include "foldcf/fold.hpp"
#include "foldcf/series.hpp"

namespace foldcf {

enum class LengthCase { Generic, SpecialEngelX1Eq2, SpecialPierceX1Eq2, NonApplicable };

std::string_view length_case_name(LengthCase c) noexcept;

struct StageRecord {
  long n = 0;
  CF cf;
  std::optional<FoldStep> step;  // absent for n = 1
  std::optional<std::size_t> predicted_length;
  std::size_t length = 0;
  bool value_matches = false;
};

struct ExpansionTrace {
  std::size_t k = 0;  // length of the expansion of the prefix
  LengthCase length_case = LengthCase::NonApplicable;
  std::vector<StageRecord> stages;
};

struct Expansion {
  CF cf;
  ExpansionTrace trace;
  std::vector<SeriesState> states;
};

/// The stages S_1..S_n without any checking. `states` must hold at least n
/// entries. Throws Error(InvalidSpec) when the prefix denominator does not
/// divide x_1.
std::vector<StageRecord> fold_stages(const SeriesSpec& spec, std::span<const SeriesState> states, long n);

/// The fold parameter used at stage n >= 2 (x_n / q^2 with q the denominator
/// of S_{n-1}). Equals z_n except possibly at n = 2 for a non-default prefix.
Int stage_z(const SeriesSpec& spec, std::span<const SeriesState> states, long n);

/// Expansion of S_n with per-stage value checks against exact partial sums.
/// Throws Error(OracleMismatch) if a folded value ever differs.
Expansion expand_series(const SeriesSpec& spec, long n, const GenOptions& opts = {});
Expansion expand_states(const SeriesSpec& spec, std::vector<SeriesState> states, long n);

/// Length formulas:
///   Generic                 (k+2) 2^(n-1) - 2,  n >= 1
///   SpecialEngelX1Eq2       5 * 2^(n-2),        n >= 3
///   SpecialPierceX1Eq2      5 * 2^(n-2) - 2,    n >= 3
/// Throws Error(CaseOutOfRange) outside those ranges and for NonApplicable.
std::size_t predict_length(std::size_t k, long n, LengthCase c);

/// predict_length where defined; the special cases fall back to the generic
/// formula for n < 3, NonApplicable yields nullopt.
std::optional<std::size_t> expected_length(std::size_t k, long n, LengthCase c);

/// Classification from the prefix expansion and the generated z values.
LengthCase classify_case(const SeriesSpec& spec, std::span<const SeriesState> states);
LengthCase classify_case(const SeriesSpec& spec, long depth = 6, const GenOptions& opts = {});

struct StageCheck {
  long n = 0;
  bool value_ok = false;
  bool word_ok = false;
  bool determinant_ok = false;
  std::optional<std::size_t> predicted_length;
  std::size_t actual_length = 0;
  std::optional<bool> length_ok;  // nullopt when the length is unpredicted
};

struct VerifyReport {
  std::size_t k = 0;
  LengthCase length_case = LengthCase::NonApplicable;
  std::vector<StageCheck> stages;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks every stage n <= n_max against the Euclidean expansion of the exact
/// partial sum, the determinant identity, and the length formula. Failures are
/// collected rather than thrown.
VerifyReport verify_expansion(const SeriesSpec& spec, long n_max, const GenOptions& opts = {});

/// p_j q_{j-1} - p_{j-1} q_j == (-1)^(j-1) for every j >= -1.
bool determinant_identity_holds(const CF& cf);

/// Occurrences of z_j - 1 in cf's word for j = 2..n (entry 0 is j = 2).
/// Counts by value, so it is only meaningful when those values are distinct
/// from each other and from the other coefficients.
std::vector<std::size_t> coefficient_census(const CF& cf, std::span<const SeriesState> states, long n);

}  // namespace foldcf
