#pragma once

#include <cstddef>

#include "foldcf/cf.hpp"
#include "foldcf/exact.hpp"

namespace foldcf {

enum class Sign : int { Plus = 1, Minus = -1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Plus : Sign::Minus; }

/// (-1)^n as a Sign.
constexpr Sign parity_sign(std::size_t n) noexcept { return n % 2 == 0 ? Sign::Plus : Sign::Minus; }

/// Bookkeeping for one application of a folding map.
/// Invariant: length_after == 2 * length_before + 2 - 2 * concatenations.
struct FoldStep {
  Int z;
  Sign sign = Sign::Plus;
  std::size_t concatenations = 0;
  std::size_t length_before = 0;
  std::size_t length_after = 0;
  CF raw;  // before zero removal
};

struct FoldResult {
  CF cf;
  FoldStep step;
};

Word word_reverse(Word w);

/// (a1, ..., a_{n-1}, a_n - 1, 1). Throws Error(EmptyWord) for an empty word
/// and Error(MalformedWord) when the last entry is < 1.
Word word_tilde(const Word& w);

/// The folding maps
///   Plus:  [a0; a] -> [a0; a, z-1, tilde(a)^R]
///   Minus: [a0; a] -> [a0; tilde(a), z-1, a^R]
/// with zeros concatenated away. If p_n/q_n is the input value (n = length),
/// the output value is p_n/q_n + sign * (-1)^n / (z q_n^2).
/// Throws Error(InvalidZ) for z < 1 and Error(EmptyWord) for an integer input.
FoldResult fold(const CF& cf, const Int& z, Sign sign);

/// Counterpart of fold for an integer [a0], adding sign / z:
///   Plus:  [a0] -> [a0; z-1, 1]
///   Minus: [a0] -> [a0-1; 1, z-1]
FoldResult fold_integer(const Int& a0, const Int& z, Sign sign);

/// Exact check of the folding identity for one (cf, z, sign).
bool folding_lemma_check(const CF& cf, const Int& z, Sign sign);

}  // namespace foldcf
