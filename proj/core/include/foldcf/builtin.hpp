#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foldcf/series.hpp"

namespace foldcf {

/// Names of the builtin specs. "kempner:<u>" is a family; it is listed as
/// such.
std::vector<std::string> builtin_names();

/// lur1     LurothA, u1 = 3, m = 1, alpha = 1, all plus
/// altlur2  AltLurothB, u1 = 2, m = 1, alpha = 1, alternating
/// zjisj    IndependentUV, beta_n = n, gamma_n = 1, u1 = v1 = 1, alternating
/// kempner:<u>  x_n = u^(2^(n-1)), all plus
/// Throws Error(UnknownExample).
SeriesSpec builtin_example(std::string_view name);

}  // namespace foldcf
