#include "foldcf/cf.hpp"

#include "foldcf/error.hpp"

namespace foldcf {

CF cf_from_rational(const Rat& value) {
  CF out;
  Int num = value.num();
  Int den = value.den();
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  out.a0 = q;
  num = den;
  den = r;
  while (den != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.word.push_back(q);
    num.swap(den);
    den.swap(r);
  }
  return normalize_trailing_one(std::move(out));
}

namespace {

// Runs the recurrence x_{j} = a_j x_{j-1} + x_{j-2} over the whole word.
void run_recurrence(const CF& cf, Int& p, Int& p_prev, Int& q, Int& q_prev) {
  p = cf.a0;
  p_prev = 1;
  q = 1;
  q_prev = 0;
  Int t;
  for (const Int& a : cf.word) {
    t = a * p + p_prev;
    p_prev.swap(p);
    p.swap(t);
    t = a * q + q_prev;
    q_prev.swap(q);
    q.swap(t);
  }
}

}  // namespace

Rat cf_value(const CF& cf) {
  Int p, p_prev, q, q_prev;
  run_recurrence(cf, p, p_prev, q, q_prev);
  return Rat::make(std::move(p), std::move(q));
}

std::vector<Convergent> convergents(const CF& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.length() + 3);
  out.push_back({-2, Int(0), Int(1)});
  out.push_back({-1, Int(1), Int(0)});
  out.push_back({0, cf.a0, Int(1)});
  long index = 0;
  for (const Int& a : cf.word) {
    const Convergent& last = out[out.size() - 1];
    const Convergent& prev = out[out.size() - 2];
    Convergent next{++index, a * last.p + prev.p, a * last.q + prev.q};
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Int> denominators(const CF& cf) {
  std::vector<Int> out;
  out.reserve(cf.length() + 1);
  Int q_prev = 0;
  out.emplace_back(1);
  for (const Int& a : cf.word) {
    Int next = a * out.back() + q_prev;
    q_prev = out.back();
    out.push_back(std::move(next));
  }
  return out;
}

Concatenated concatenate_zeros(const CF& raw) {
  Concatenated out;
  out.cf.a0 = raw.a0;
  Word& dst = out.cf.word;
  dst.reserve(raw.word.size());
  const Word& src = raw.word;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] < 0) throw Error(Errc::MalformedWord, "negative partial quotient " + to_string(src[i]));
    if (src[i] != 0) {
      dst.push_back(src[i]);
      continue;
    }
    if (i + 1 < src.size() && src[i + 1] == 0) {
      throw Error(Errc::MalformedWord, "adjacent zero partial quotients at position " + std::to_string(i + 1));
    }
    ++out.zeros_removed;
    if (i + 1 < src.size()) {
      if (src[i + 1] < 0) throw Error(Errc::MalformedWord, "negative partial quotient " + to_string(src[i + 1]));
      if (dst.empty()) {
        out.cf.a0 += src[i + 1];
      } else {
        dst.back() += src[i + 1];
      }
      ++i;
    } else {
      // [..., A, 0] has the value of [...].
      if (dst.empty()) throw Error(Errc::MalformedWord, "word ends in a zero with nothing before it");
      dst.pop_back();
    }
  }
  return out;
}

CF normalize_trailing_one(CF cf) {
  if (cf.word.empty() || cf.word.back() != 1) return cf;
  cf.word.pop_back();
  if (cf.word.empty()) {
    cf.a0 += 1;
  } else {
    cf.word.back() += 1;
  }
  return cf;
}

CF canonicalize(const CF& raw, bool normalize_trailing) {
  CF out = concatenate_zeros(raw).cf;
  if (normalize_trailing) out = normalize_trailing_one(std::move(out));
  return out;
}

std::string to_string(const CF& cf) {
  std::string out = "[" + to_string(cf.a0);
  for (std::size_t i = 0; i < cf.word.size(); ++i) {
    out += (i == 0 ? ';' : ',');
    out += to_string(cf.word[i]);
  }
  out += ']';
  return out;
}

CF parse_cf(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(Errc::ParseError, "bad continued fraction '" + std::string(text) + "': " + why);
  };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') throw fail("expected [a0;a1,...]");
  std::string_view body = text.substr(1, text.size() - 2);
  CF out;
  auto semi = body.find(';');
  try {
    out.a0 = parse_int(body.substr(0, semi));
    if (semi == std::string_view::npos) return out;
    std::string_view rest = body.substr(semi + 1);
    while (true) {
      auto comma = rest.find(',');
      out.word.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } catch (const Error&) {
    throw fail("malformed integer");
  }
  for (const Int& a : out.word) {
    if (a < 1) throw fail("partial quotients after ';' must be >= 1");
  }
  return out;
}

}  // namespace foldcf
