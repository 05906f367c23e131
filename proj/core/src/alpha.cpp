#include "foldcf/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <mpfr.h>

#include "foldcf/error.hpp"

namespace foldcf {
namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

bool is_integral(double x) { return std::isfinite(x) && std::floor(x) == x; }

// Every operation below is monotone increasing in its (positive) operands, so
// rounding everything toward `rnd` gives a one-sided bound of the true value.
void bound(Mpfr& out, const MuParams& params, long n, const Int& u_n, const Int& u_next, mpfr_rnd_t rnd,
           mpfr_prec_t precision) {
  Mpfr scale(precision), x(precision), y(precision), term(precision), tmp(precision);

  mpfr_set_ui(scale.get(), 1, rnd);
  if (params.C != 0.0) {
    mpfr_set_d(tmp.get(), params.nu, rnd);
    mpfr_pow_ui(tmp.get(), tmp.get(), static_cast<unsigned long>(n), rnd);
    mpfr_mul_d(tmp.get(), tmp.get(), params.C, rnd);
    mpfr_exp(scale.get(), tmp.get(), rnd);
  }

  mpfr_set_z(x.get(), u_n.get_mpz_t(), rnd);
  mpfr_set_z(y.get(), u_next.get_mpz_t(), rnd);
  mpfr_set_zero(out.get(), 1);
  for (const PseudoTerm& t : params.terms) {
    mpfr_set_d(term.get(), t.c, rnd);
    if (t.r != 0.0) {
      mpfr_set_d(tmp.get(), t.r, rnd);
      mpfr_pow(tmp.get(), x.get(), tmp.get(), rnd);
      mpfr_mul(term.get(), term.get(), tmp.get(), rnd);
    }
    if (t.s != 0.0) {
      mpfr_set_d(tmp.get(), t.s, rnd);
      mpfr_pow(tmp.get(), y.get(), tmp.get(), rnd);
      mpfr_mul(term.get(), term.get(), tmp.get(), rnd);
    }
    mpfr_add(out.get(), out.get(), term.get(), rnd);
  }
  mpfr_mul(out.get(), out.get(), scale.get(), rnd);
}

Int exact_integer_value(const MuParams& params, const Int& u_n, const Int& u_next) {
  Int sum = 0;
  for (const PseudoTerm& t : params.terms) {
    Int term;
    mpz_set_d(term.get_mpz_t(), t.c);
    Int power;
    mpz_pow_ui(power.get_mpz_t(), u_n.get_mpz_t(), static_cast<unsigned long>(t.r));
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), u_next.get_mpz_t(), static_cast<unsigned long>(t.s));
    term *= power;
    sum += term;
  }
  return sum;
}

}  // namespace

double alpha_log10_estimate(const MuParams& params, long n, double ln_u, double ln_u_next) {
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(params.terms.size());
  for (const PseudoTerm& t : params.terms) {
    logs.push_back(std::log(t.c) + t.r * ln_u + t.s * ln_u_next);
    peak = std::max(peak, logs.back());
  }
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - peak);
  double ln_total = peak + std::log(acc);
  if (params.C != 0.0) ln_total += params.C * std::pow(params.nu, static_cast<double>(n));
  return ln_total / std::numbers::ln10;
}

Int alpha_eval(const MuParams& params, long n, const Int& u_n, const Int& u_next, const AlphaEvalOptions& opts) {
  params.validate();
  if (u_n < 1 || u_next < 1) throw Error(Errc::InvalidSpec, "pseudo-polynomial arguments must be >= 1");

  double log2_mag = alpha_log10_estimate(params, n, log_abs(u_n), log_abs(u_next)) * std::numbers::ln10 /
                    std::numbers::ln2;
  if (!std::isfinite(log2_mag)) throw Error(Errc::PrecisionExhausted, "alpha magnitude overflows");
  const auto magnitude_bits = static_cast<mpfr_prec_t>(std::max(0.0, std::ceil(log2_mag))) + 16;

  bool integral = params.C == 0.0;
  for (const PseudoTerm& t : params.terms) integral = integral && is_integral(t.c) && is_integral(t.r) && is_integral(t.s);

  for (long frac = opts.start_fraction_bits; frac <= opts.max_fraction_bits; frac *= 2) {
    const mpfr_prec_t precision = magnitude_bits + frac;
    Mpfr lo(precision), hi(precision);
    bound(lo, params, n, u_n, u_next, MPFR_RNDD, precision);
    bound(hi, params, n, u_n, u_next, MPFR_RNDU, precision);
    mpfr_ceil(lo.get(), lo.get());
    mpfr_ceil(hi.get(), hi.get());
    if (!mpfr_equal_p(lo.get(), hi.get())) continue;

    Int out;
    mpfr_get_z(out.get_mpz_t(), lo.get(), MPFR_RNDN);
    if (integral) {
      Int exact = exact_integer_value(params, u_n, u_next);
      if (exact != out) {
        throw Error(Errc::OracleMismatch,
                    "certified ceiling " + to_string(out) + " differs from exact value " + to_string(exact));
      }
    }
    return out;
  }
  throw Error(Errc::PrecisionExhausted, "no certified ceiling within " + std::to_string(opts.max_fraction_bits) +
                                            " fraction bits (value may be an integer)");
}

}  // namespace foldcf
