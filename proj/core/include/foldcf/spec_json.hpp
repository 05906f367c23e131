#pragma once

// JSON form of SeriesSpec. Big integers are decimal strings on output; on
// input both strings and JSON integers are accepted.
//
//   {"variant": "LurothA", "u1": "3", "m": "1",
//    "alpha": {"const": ["1"]} | {"pseudo": {"C": 1, "nu": 2, "terms": [{"c": 1, "r": 0, "s": 0}]}},
//    "signs": "plus" | "alternating" | {"list": [1, -1]} | {"period": [1, 1, -1]},
//    "prefix": "1/3",
//    "v": {"const": [...]},                          EngelA / EngelB
//    "v1": "1", "beta": "n" | {"const": [...]}, "gamma": ...,   IndependentUV
//    "x_list": [...] | "kempner": "2"}               ExplicitX

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "foldcf/cf.hpp"
#include "foldcf/fold.hpp"
#include "foldcf/series.hpp"

namespace foldcf {

/// Throws Error(InvalidSpec) for unknown keys, wrong types or bad values.
SeriesSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SeriesSpec& spec);

SeriesSpec parse_spec(std::string_view text);
SeriesSpec load_spec_file(const std::filesystem::path& path);

nlohmann::json to_json(const CF& cf);
nlohmann::json to_json(const FoldStep& step);
nlohmann::json to_json(const SeriesState& state);

}  // namespace foldcf
