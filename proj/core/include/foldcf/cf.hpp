#pragma once

// Finite regular continued fractions [a0; a1, ..., an].

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "foldcf/exact.hpp"

namespace foldcf {

/// Partial quotients a1..an. The integer part is not part of the word.
using Word = std::vector<Int>;

struct CF {
  Int a0;
  Word word;

  /// Length ignores the integer part.
  std::size_t length() const noexcept { return word.size(); }

  friend bool operator==(const CF&, const CF&) = default;
};

/// p_index / q_index. Indices -2 and -1 are the seed columns of the matrix
/// recurrence: (p, q) = (0, 1) and (1, 0).
struct Convergent {
  long index;
  Int p;
  Int q;
};

/// Euclidean expansion. The word is empty for integers, otherwise its last
/// entry is > 1.
CF cf_from_rational(const Rat& value);

/// Exact value of a word whose entries are all >= 1.
Rat cf_value(const CF& cf);

/// Convergents for indices -2 .. length(), via the three-term recurrence.
std::vector<Convergent> convergents(const CF& cf);

/// Denominators q_0 .. q_n only (the hot path for exponent estimation).
std::vector<Int> denominators(const CF& cf);

/// Result of removing zero partial quotients.
struct Concatenated {
  CF cf;
  std::size_t zeros_removed = 0;
};

/// Applies [..., A, 0, B, ...] -> [..., A+B, ...] until no zero remains.
/// A zero in first position merges into a0; a trailing zero drops itself and
/// its predecessor. Each removal shortens the word by two.
/// Throws Error(MalformedWord) for negative entries, adjacent zeros, or a word
/// that is a single zero.
Concatenated concatenate_zeros(const CF& raw);

/// [a0; ..., b, 1] -> [a0; ..., b+1]; [a0; 1] -> [a0 + 1].
CF normalize_trailing_one(CF cf);

/// Zero removal followed, when requested, by trailing-one normalization.
CF canonicalize(const CF& raw, bool normalize_trailing = true);

/// Text form "[a0]" or "[a0;a1,...,an]", no whitespace.
std::string to_string(const CF& cf);

/// Inverse of to_string. Throws Error(ParseError).
CF parse_cf(std::string_view text);

}  // namespace foldcf
