#pragma once

#include "foldcf/exact.hpp"
#include "foldcf/series.hpp"

namespace foldcf {

struct AlphaEvalOptions {
  long start_fraction_bits = 64;
  long max_fraction_bits = 1L << 16;
};

/// Certified ceil(exp(C nu^n) * P(u_n, u_next)).
///
/// The value is enclosed in an interval with outward-rounded MPFR arithmetic
/// at (magnitude + fraction) bits of precision; the fraction bits double
/// until both interval ends share a ceiling. When C == 0 and every c, r, s is
/// an integer the exact integer value is computed as well and must agree.
/// Throws Error(PrecisionExhausted) if the ladder ends without a certificate.
Int alpha_eval(const MuParams& params, long n, const Int& u_n, const Int& u_next,
               const AlphaEvalOptions& opts = {});

/// Floating estimate of log10(alpha_n), used for digit-budget prediction.
double alpha_log10_estimate(const MuParams& params, long n, double ln_u, double ln_u_next);

}  // namespace foldcf
