#include "foldcf/fold.hpp"

#include <algorithm>
#include <iterator>

#include "foldcf/error.hpp"

namespace foldcf {

Word word_reverse(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word word_tilde(const Word& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "tilde of an empty word");
  if (w.back() < 1) throw Error(Errc::MalformedWord, "last partial quotient must be >= 1");
  Word out;
  out.reserve(w.size() + 1);
  out.assign(w.begin(), w.end());
  out.back() -= 1;
  out.emplace_back(1);
  return out;
}

namespace {

FoldResult finish(CF raw, const Int& z, Sign sign, std::size_t length_before) {
  Concatenated c = concatenate_zeros(raw);
  FoldResult out;
  out.step.z = z;
  out.step.sign = sign;
  out.step.concatenations = c.zeros_removed;
  out.step.length_before = length_before;
  out.step.length_after = c.cf.length();
  out.step.raw = std::move(raw);
  out.cf = std::move(c.cf);
  return out;
}

void check_z(const Int& z) {
  if (z < 1) throw Error(Errc::InvalidZ, "fold parameter z must be >= 1, got " + to_string(z));
}

}  // namespace

FoldResult fold(const CF& cf, const Int& z, Sign sign) {
  check_z(z);
  if (cf.word.empty()) throw Error(Errc::EmptyWord, "fold needs a non-empty word; use fold_integer for [a0]");
  const Word& a = cf.word;
  Word tilde = word_tilde(a);

  CF raw;
  raw.a0 = cf.a0;
  raw.word.reserve(2 * a.size() + 2);
  if (sign == Sign::Plus) {
    raw.word.insert(raw.word.end(), a.begin(), a.end());
    raw.word.push_back(z - 1);
    raw.word.insert(raw.word.end(), tilde.rbegin(), tilde.rend());
  } else {
    raw.word.insert(raw.word.end(), tilde.begin(), tilde.end());
    raw.word.push_back(z - 1);
    raw.word.insert(raw.word.end(), a.rbegin(), a.rend());
  }
  return finish(std::move(raw), z, sign, a.size());
}

FoldResult fold_integer(const Int& a0, const Int& z, Sign sign) {
  check_z(z);
  CF raw;
  if (sign == Sign::Plus) {
    raw.a0 = a0;
    raw.word = {z - 1, Int(1)};
  } else {
    raw.a0 = a0 - 1;
    raw.word = {Int(1), z - 1};
  }
  return finish(std::move(raw), z, sign, 0);
}

bool folding_lemma_check(const CF& cf, const Int& z, Sign sign) {
  FoldResult folded = cf.word.empty() ? fold_integer(cf.a0, z, sign) : fold(cf, z, sign);
  Int q = denominators(cf).back();
  Rat expected = Rat::make(Int(to_int(sign * parity_sign(cf.length()))), z * q * q);
  return cf_value(folded.cf) - cf_value(cf) == expected;
}

}  // namespace foldcf
