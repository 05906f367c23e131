#pragma once

/**
 * @file dioph.hpp
 * @brief Irrationality exponents: predicted values and empirical estimates.
 *
 * For a number with convergent denominators q_n,
 *   mu = 1 + limsup log q_{n+1} / log q_n.
 * For the Lüroth-type families the largest characteristic root is
 *   A:  lambda = (s + 4 + sqrt((s+4)^2 + 4(r-1))) / 2   (>= 2 + sqrt 3)
 *   B:  lambda = (s + 2 + sqrt((s+2)^2 + 4(r+1))) / 2   (>= 1 + sqrt 2)
 * and mu = max(nu, lambda).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "foldcf/exact.hpp"
#include "foldcf/expand.hpp"
#include "foldcf/series.hpp"

namespace foldcf {

/// a + b * sqrt(d) with d a squarefree positive integer (d == 1 and b == 0 for
/// rationals).
struct Surd {
  Rat a;
  Rat b;
  Int d{1};

  double value() const;
  /// e.g. "2+sqrt(3)", "1/2+3/2*sqrt(5)", "10".
  std::string str() const;

  friend bool operator==(const Surd&, const Surd&) = default;
};

/// The root in double precision.
double lambda_root(Recurrence family, double r, double s);

/// The same root as an exact surd when r and s are integers.
std::optional<Surd> lambda_root_closed(Recurrence family, double r, double s);

struct MuPrediction {
  double lambda = 0.0;
  double mu = 0.0;
  std::optional<Surd> closed;  // exact mu when available
};

/// max(nu, lambda(r_M, s_N)). With C == 0 the exponential factor is constant,
/// so nu plays no role and mu = lambda.
MuPrediction mu_predicted(Recurrence family, const MuParams& params);

/// Index into the CF where a fold parameter first shows up, and the log ratio
/// there.
struct Landmark {
  long n = 0;              // stage whose fold produced it
  std::size_t index = 0;   // j such that the ratio is L_j / L_{j-1}
  double ratio = 0.0;
};

struct MuReport {
  Variant variant = Variant::LurothA;
  long n_max = 0;
  bool generic = false;
  std::optional<MuPrediction> predicted;
  std::vector<double> log_q;          // L_j = log q_j, j = 0..length
  std::vector<double> ratios;         // L_{j+1} / L_j, j = 0..length-1 (0 when L_j == 0)
  std::vector<double> log_u;          // Lambda_n = log u_n, when u exists
  std::vector<std::size_t> stage_lengths;
  std::size_t window_start = 0;
  double window_max = 0.0;
  double estimate = 0.0;              // 1 + window_max
  std::vector<Landmark> landmarks;
};

/// Default window start: stage_lengths at stage max(3, ceil(n_max / 2)).
std::size_t default_window_start(const std::vector<std::size_t>& stage_lengths);

/// Expands S_{n_max}, takes log q_j for every convergent, and reports
/// 1 + max_{j >= window_start} L_{j+1} / L_j.
MuReport mu_estimate(const SeriesSpec& spec, long n_max, std::optional<std::size_t> window_start = std::nullopt,
                     const GenOptions& opts = {});

}  // namespace foldcf
