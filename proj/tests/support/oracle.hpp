#pragma once
// Reference implementations for tests. Deliberately naive: mpq_class
// arithmetic, backward CF evaluation, schoolbook recurrences. Nothing here
// calls into foldcf except to read spec parameters.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "foldcf/cf.hpp"
#include "foldcf/series.hpp"

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

struct Expansion {
  Z a0;
  std::vector<Z> word;
  bool operator==(const Expansion&) const = default;
};

// Backward evaluation; tolerates interior zeros.
inline Q evaluate(const Z& a0, const std::vector<Z>& word) {
  if (word.empty()) return Q(a0);
  Q tail(word.back());
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    Q inv = 1 / tail;
    tail = Q(word[i]) + inv;
  }
  Q inv = 1 / tail;
  return Q(a0) + inv;
}

inline Q evaluate(const foldcf::CF& cf) { return evaluate(cf.a0, cf.word); }

// Euclid on p/q. Always ends in a partial quotient > 1.
inline Expansion euclid(Q v) {
  v.canonicalize();
  Expansion out;
  Z p = v.get_num(), q = v.get_den();
  Z a, r;
  mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  out.a0 = a;
  while (r != 0) {
    p = q;
    q = r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.word.push_back(a);
  }
  return out;
}

inline bool same_expansion(const foldcf::CF& cf, const Expansion& e) { return cf.a0 == e.a0 && cf.word == e.word; }

struct Sequences {
  std::vector<Z> u, v, x;  // index 0 holds n = 1
};

inline Z int_seq(const foldcf::IntSeq& s, long index, long first) {
  if (s.kind() == foldcf::IntSeq::Kind::Identity) return Z(index);
  const auto& vals = s.values();
  const auto i = static_cast<std::size_t>(index - first);
  return i < vals.size() ? vals[i] : vals.back();
}

inline int sign_at(const foldcf::SignSeq& s, long n) {
  if (n < 2) return 1;
  using K = foldcf::SignSeq::Kind;
  const auto& e = s.entries();
  switch (s.kind()) {
    case K::AllPlus: return 1;
    case K::Alternating: return n % 2 == 0 ? -1 : 1;
    case K::List: {
      const auto i = static_cast<std::size_t>(n - 2);
      return foldcf::to_int(i < e.size() ? e[i] : e.back());
    }
    case K::Periodic: return foldcf::to_int(e[static_cast<std::size_t>(n - 2) % e.size()]);
  }
  return 1;
}

// u, v, x straight from the defining formulas. Constant-list alpha only.
inline Sequences sequences(const foldcf::SeriesSpec& spec, long count) {
  using foldcf::Variant;
  Sequences s;
  const Variant var = spec.variant;
  if (var == Variant::ExplicitX) {
    if (const auto* k = std::get_if<foldcf::KempnerX>(&spec.x)) {
      Z e = 1;
      for (long n = 1; n <= count; ++n) {
        Z xn;
        mpz_pow_ui(xn.get_mpz_t(), k->base.get_mpz_t(), e.get_ui());
        s.x.push_back(xn);
        e *= 2;
      }
    } else {
      const auto& xs = std::get<std::vector<foldcf::Int>>(spec.x);
      s.x.assign(xs.begin(), xs.begin() + count);
    }
    return s;
  }
  if (var == Variant::IndependentUV) {
    Z pu = 1, pv = 1;
    for (long n = 1; n <= count; ++n) {
      Z un = n == 1 ? spec.u1 : Z(int_seq(spec.beta, n, 2) * pu);
      Z vn = n == 1 ? spec.v1 : Z(int_seq(spec.gamma, n, 2) * pv);
      pu *= un;
      pv *= vn;
      s.u.push_back(un);
      s.v.push_back(vn);
    }
  } else {
    const bool rec_a = var == Variant::EngelA || var == Variant::LurothA || var == Variant::AltLurothA;
    auto v_of = [&](long n, const Z& un) -> Z {
      if (var == Variant::LurothA || var == Variant::LurothB) return un - 1;
      if (var == Variant::AltLurothA || var == Variant::AltLurothB) return un + 1;
      return int_seq(spec.v, n, 1);
    };
    const auto& alpha = std::get<foldcf::IntSeq>(spec.alpha);
    s.u.push_back(spec.u1);
    s.v.push_back(v_of(1, spec.u1));
    if (count >= 2) {
      Z u2 = rec_a ? Z(spec.m * spec.u1 * spec.u1 * s.v[0]) : Z(spec.m * spec.u1);
      s.u.push_back(u2);
      s.v.push_back(v_of(2, u2));
    }
    for (long n = 1; n + 2 <= count; ++n) {
      const Z& un = s.u[static_cast<std::size_t>(n - 1)];
      const Z& un1 = s.u[static_cast<std::size_t>(n)];
      const Z a = int_seq(alpha, n, 1);
      Z next;
      if (rec_a) {
        Z num = a * un1 * un1 * un1 * s.v[static_cast<std::size_t>(n)];
        if (num % un != 0) throw std::logic_error("oracle: inexact division");
        next = num / un;
      } else {
        next = a * un1 * un1 * s.v[static_cast<std::size_t>(n - 1)];
      }
      s.u.push_back(next);
      s.v.push_back(v_of(n + 2, next));
    }
  }
  s.x.push_back(s.u[0]);
  for (long n = 2; n <= count; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    s.x.push_back(s.x[i - 1] * s.u[i] * s.v[i - 1]);
  }
  return s;
}

inline Q partial_sum(const foldcf::SeriesSpec& spec, const std::vector<Z>& x, long n) {
  Q sum = spec.prefix ? Q(spec.prefix->num(), spec.prefix->den()) : Q(Z(1), x[0]);
  sum.canonicalize();
  for (long j = 2; j <= n; ++j) {
    Q term(Z(sign_at(spec.signs, j)), x[static_cast<std::size_t>(j - 1)]);
    term.canonicalize();
    sum += term;
  }
  return sum;
}

inline bool determinant_ok(const foldcf::CF& cf) {
  // p_{j} q_{j-1} - p_{j-1} q_{j} = (-1)^{j-1}, from the seeds at j = -1, -2.
  Z p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  std::vector<Z> all{cf.a0};
  all.insert(all.end(), cf.word.begin(), cf.word.end());
  for (std::size_t j = 0; j < all.size(); ++j) {
    Z p = all[j] * p1 + p2, q = all[j] * q1 + q2;
    const int expect = j % 2 == 0 ? -1 : 1;
    if (p * q1 - p1 * q != expect) return false;
    p2 = p1; q2 = q1; p1 = p; q1 = q;
  }
  return true;
}

}  // namespace oracle
