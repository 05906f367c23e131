#include <nlohmann/json.hpp>

#include "doctest.h"
#include "foldcf/builtin.hpp"
#include "foldcf/error.hpp"
#include "foldcf/spec_json.hpp"

using foldcf::Errc;
using foldcf::Error;
using foldcf::Int;
using foldcf::SeriesSpec;
using nlohmann::json;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected foldcf::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("builtins round-trip through JSON") {
  for (const char* name : {"lur1", "altlur2", "zjisj", "kempner:2", "kempner:5"}) {
    CAPTURE(name);
    const SeriesSpec s = foldcf::builtin_example(name);
    CHECK(foldcf::spec_from_json(foldcf::spec_to_json(s)) == s);
  }
}

TEST_CASE("builtin dumps") {
  const json lur = foldcf::spec_to_json(foldcf::builtin_example("lur1"));
  CHECK(lur["variant"] == "LurothA");
  CHECK(lur["u1"] == "3");
  CHECK(lur["m"] == "1");
  CHECK(lur["alpha"]["const"] == json::array({"1"}));
  const json k = foldcf::spec_to_json(foldcf::builtin_example("kempner:2"));
  CHECK(k["variant"] == "ExplicitX");
  CHECK(k["kempner"] == "2");
  CHECK(code_of([] { foldcf::builtin_example("lur9"); }) == Errc::UnknownExample);
  CHECK(code_of([] { foldcf::builtin_example("kempner:1"); }) == Errc::UnknownExample);
  CHECK(code_of([] { foldcf::builtin_example("kempner:x"); }) == Errc::UnknownExample);
}

TEST_CASE("parse variants of the schema") {
  SeriesSpec s = foldcf::parse_spec(R"({"variant":"EngelB","u1":5,"m":"2","v":{"const":[1,2]},
      "alpha":{"const":["3"]},"signs":{"list":[-1,1]},"prefix":"1/5"})");
  CHECK(s.variant == foldcf::Variant::EngelB);
  CHECK(s.u1 == 5);
  CHECK(s.m == 2);
  CHECK(s.v.values() == std::vector<Int>{1, 2});
  CHECK(s.signs.at(2) == foldcf::Sign::Minus);
  CHECK(s.prefix == foldcf::Rat::make(Int(1), Int(5)));

  s = foldcf::parse_spec(R"({"variant":"LurothB","alpha":{"pseudo":{"C":1,"nu":1.5,"terms":[{"c":1,"r":0.5,"s":0}]}},
      "signs":{"period":[1,-1]}})");
  const auto& mp = std::get<foldcf::MuParams>(s.alpha);
  CHECK(mp.nu == 1.5);
  CHECK(mp.terms.at(0).r == 0.5);
  CHECK(s.signs.kind() == foldcf::SignSeq::Kind::Periodic);

  s = foldcf::parse_spec(R"({"variant":"ExplicitX","x_list":["3","108","60676128"]})");
  CHECK(std::get<std::vector<Int>>(s.x).size() == 3);
}

TEST_CASE("malformed specs") {
  for (const char* bad : {
           R"({"variant":"LurothA","bogus":1})",
           R"({"variant":"Nope"})",
           R"({"u1":3})",
           R"({"variant":"LurothA","u1":"3x"})",
           R"({"variant":"LurothA","signs":"sideways"})",
           R"({"variant":"LurothA","signs":{"list":[2]}})",
           R"({"variant":"LurothA","alpha":{"const":[]}})",
           R"({"variant":"LurothA","prefix":"1/0"})",
           R"([1,2])",
           R"({not json)",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(foldcf::parse_spec(bad), Error);
  }
}

TEST_CASE("state and step JSON use decimal strings") {
  const auto st = foldcf::gen_sequences(foldcf::builtin_example("lur1"), 4);
  const json j = foldcf::to_json(st[3]);
  CHECK(j["x"] == "132875521042766180738219532288");
  CHECK(j["n"] == 4);
}
