#include "foldcf/dioph.hpp"

#include <algorithm>
#include <cmath>

#include "foldcf/error.hpp"

namespace foldcf {

double Surd::value() const {
  auto to_double = [](const Rat& r) { return mpq_class(r.num(), r.den()).get_d(); };
  return to_double(a) + to_double(b) * std::sqrt(Int(d).get_d());
}

std::string Surd::str() const {
  if (b == Rat()) return a.str();
  std::string out;
  if (a != Rat()) out = a.str() + (b > Rat() ? "+" : "");
  if (b == Rat(Int(-1))) {
    out += "-";
  } else if (b != Rat(Int(1))) {
    out += b.str() + "*";
  }
  return out + "sqrt(" + to_string(d) + ")";
}

namespace {

struct Quadratic {
  double center;     // (s + 4) or (s + 2)
  double radicand;   // center^2 + 4(r -/+ 1)
};

Quadratic quadratic(Recurrence family, double r, double s) {
  const double center = family == Recurrence::A ? s + 4.0 : s + 2.0;
  const double shift = family == Recurrence::A ? r - 1.0 : r + 1.0;
  return {center, center * center + 4.0 * shift};
}

bool is_integral(double x) { return std::isfinite(x) && std::floor(x) == x; }

// value = f^2 * d with d squarefree; value > 0.
std::pair<Int, Int> split_square(Int value) {
  Int f = 1;
  for (Int p = 2; p * p <= value; ++p) {
    const Int sq = p * p;
    while (mpz_divisible_p(value.get_mpz_t(), sq.get_mpz_t())) {
      value /= sq;
      f *= p;
    }
  }
  return {f, value};
}

}  // namespace

double lambda_root(Recurrence family, double r, double s) {
  const Quadratic q = quadratic(family, r, s);
  return 0.5 * (q.center + std::sqrt(q.radicand));
}

std::optional<Surd> lambda_root_closed(Recurrence family, double r, double s) {
  if (!is_integral(r) || !is_integral(s) || r < 0 || s < 0) return std::nullopt;
  const Int center(family == Recurrence::A ? s + 4.0 : s + 2.0);
  const Int shift(family == Recurrence::A ? r - 1.0 : r + 1.0);
  const Int radicand = center * center + 4 * shift;
  if (radicand < 0) return std::nullopt;
  Surd out;
  out.a = Rat::make(center, Int(2));
  Int root = sqrt(radicand);
  if (root * root == radicand) {
    out.a += Rat::make(root, Int(2));
    return out;
  }
  auto [factor, free] = split_square(radicand);
  out.b = Rat::make(factor, Int(2));
  out.d = free;
  return out;
}

MuPrediction mu_predicted(Recurrence family, const MuParams& params) {
  params.validate();
  MuPrediction out;
  out.lambda = lambda_root(family, params.r(), params.s());
  auto closed = lambda_root_closed(family, params.r(), params.s());
  if (params.C == 0.0 || out.lambda >= params.nu) {
    out.mu = out.lambda;
    out.closed = closed;
  } else {
    out.mu = params.nu;
    if (is_integral(params.nu)) out.closed = Surd{Rat(Int(params.nu)), Rat(), Int(1)};
  }
  return out;
}

std::size_t default_window_start(const std::vector<std::size_t>& stage_lengths) {
  if (stage_lengths.empty()) return 0;
  const long n_max = static_cast<long>(stage_lengths.size());
  const long stage = std::min(n_max, std::max(3L, (n_max + 1) / 2));
  return stage_lengths[static_cast<std::size_t>(stage - 1)];
}

namespace {

bool is_luroth_family(Variant v) {
  return v == Variant::LurothA || v == Variant::LurothB || v == Variant::AltLurothA || v == Variant::AltLurothB;
}

}  // namespace

MuReport mu_estimate(const SeriesSpec& spec, long n_max, std::optional<std::size_t> window_start,
                     const GenOptions& opts) {
  const Expansion ex = expand_series(spec, n_max, opts);
  MuReport report;
  report.variant = spec.variant;
  report.n_max = n_max;
  report.generic = ex.trace.length_case == LengthCase::Generic;

  if (is_luroth_family(spec.variant)) {
    const Recurrence family = *recurrence_of(spec.variant);
    if (const auto* mp = std::get_if<MuParams>(&spec.alpha)) {
      report.predicted = mu_predicted(family, *mp);
    } else {
      // Bounded alpha behaves like a constant pseudo-polynomial with C = 0.
      report.predicted = mu_predicted(family, MuParams{});
    }
  }

  for (const StageRecord& rec : ex.trace.stages) report.stage_lengths.push_back(rec.length);
  for (const SeriesState& st : ex.states) {
    if (st.u) report.log_u.push_back(log_abs(*st.u));
  }

  const std::vector<Int> q = denominators(ex.cf);
  report.log_q.reserve(q.size());
  for (const Int& v : q) report.log_q.push_back(log_abs(v));
  const std::size_t count = report.log_q.size();
  report.ratios.assign(count > 0 ? count - 1 : 0, 0.0);
  for (std::size_t j = 0; j + 1 < count; ++j) {
    if (report.log_q[j] > 0.0) report.ratios[j] = report.log_q[j + 1] / report.log_q[j];
  }

  report.window_start = window_start.value_or(default_window_start(report.stage_lengths));
  if (report.window_start >= report.ratios.size()) {
    throw Error(Errc::InvalidSpec, "window start " + std::to_string(report.window_start) +
                                       " is past the last ratio index " + std::to_string(report.ratios.size()));
  }
  report.window_max = *std::max_element(report.ratios.begin() + static_cast<long>(report.window_start),
                                        report.ratios.end());
  report.estimate = 1.0 + report.window_max;

  // After stage n (length l), a Plus fold puts z-1 at index l+1, a Minus fold
  // at l+2 (when nothing was concatenated across it).
  for (std::size_t i = 1; i < ex.trace.stages.size(); ++i) {
    const StageRecord& rec = ex.trace.stages[i];
    const std::size_t before = rec.step->length_before;
    const std::size_t j = before + (rec.step->sign == Sign::Plus ? 1 : 2);
    if (j < count && j >= 1 && report.log_q[j - 1] > 0.0) {
      report.landmarks.push_back({rec.n, j, report.log_q[j] / report.log_q[j - 1]});
    }
  }
  return report;
}

}  // namespace foldcf
