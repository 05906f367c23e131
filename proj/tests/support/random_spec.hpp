#pragma once

#include <random>
#include <vector>

#include "foldcf/series.hpp"

namespace testutil {

inline foldcf::Int rand_int(std::mt19937_64& rng, long lo, long hi) {
  return foldcf::Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline std::vector<foldcf::Int> rand_list(std::mt19937_64& rng, std::size_t len, long lo, long hi) {
  std::vector<foldcf::Int> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(rand_int(rng, lo, hi));
  return out;
}

inline foldcf::SignSeq rand_signs(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return foldcf::SignSeq::all_plus();
    case 1: return foldcf::SignSeq::alternating();
    default: {
      std::vector<foldcf::Sign> s;
      for (int i = 0; i < 6; ++i) s.push_back(rng() % 2 ? foldcf::Sign::Plus : foldcf::Sign::Minus);
      return foldcf::SignSeq::list(std::move(s));
    }
  }
}

// Any non-explicit variant with constant-list alpha in [1, 10].
inline foldcf::SeriesSpec random_spec(std::mt19937_64& rng) {
  using foldcf::Variant;
  static constexpr Variant kVariants[] = {Variant::EngelA,     Variant::EngelB,     Variant::LurothA,
                                          Variant::LurothB,    Variant::AltLurothA, Variant::AltLurothB,
                                          Variant::IndependentUV};
  foldcf::SeriesSpec spec;
  spec.variant = kVariants[rng() % std::size(kVariants)];
  spec.u1 = rand_int(rng, 2, 5);
  spec.m = rand_int(rng, 1, 3);
  spec.alpha = foldcf::IntSeq::list(rand_list(rng, 5, 1, 10));
  spec.signs = rand_signs(rng);
  if (spec.variant == Variant::EngelA || spec.variant == Variant::EngelB) {
    spec.v = foldcf::IntSeq::list(rand_list(rng, 6, 1, 4));
  }
  if (spec.variant == Variant::IndependentUV) {
    spec.u1 = rand_int(rng, 1, 4);
    spec.v1 = rand_int(rng, 1, 3);
    spec.beta = foldcf::IntSeq::list(rand_list(rng, 5, 1, 4));
    spec.gamma = foldcf::IntSeq::list(rand_list(rng, 5, 1, 3));
  }
  return spec;
}

inline foldcf::SeriesSpec kempner_spec(long base) {
  foldcf::SeriesSpec spec;
  spec.variant = foldcf::Variant::ExplicitX;
  spec.x = foldcf::KempnerX{foldcf::Int(base)};
  return spec;
}

}  // namespace testutil
