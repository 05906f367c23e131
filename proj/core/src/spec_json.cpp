#include "foldcf/spec_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "foldcf/error.hpp"

namespace foldcf {

using nlohmann::json;

namespace {

Error invalid(const std::string& what) { return Error(Errc::InvalidSpec, what); }

Int int_field(const json& j, const char* name) {
  try {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.dump(), 10);
  } catch (const Error&) {
  }
  throw invalid(std::string("field '") + name + "' must be an integer or decimal string");
}

double real_field(const json& j, const char* name) {
  if (!j.is_number()) throw invalid(std::string("field '") + name + "' must be a number");
  return j.get<double>();
}

json int_out(const Int& v) { return to_string(v); }

std::vector<Int> int_list(const json& j, const char* name) {
  if (!j.is_array()) throw invalid(std::string("field '") + name + "' must be an array");
  std::vector<Int> out;
  for (const json& e : j) out.push_back(int_field(e, name));
  return out;
}

json int_list_out(const std::vector<Int>& values) {
  json out = json::array();
  for (const Int& v : values) out.push_back(int_out(v));
  return out;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.contains(key)) throw invalid(std::string("unknown key '") + key + "' in " + where);
  }
}

IntSeq int_seq(const json& j, const char* name) {
  if (j.is_string() && j.get<std::string>() == "n") return IntSeq::identity();
  if (j.is_object()) {
    reject_unknown(j, {"const"}, name);
    if (j.contains("const")) return IntSeq::list(int_list(j.at("const"), name));
  }
  throw invalid(std::string("field '") + name + "' must be \"n\" or {\"const\": [...]}");
}

json int_seq_out(const IntSeq& seq) {
  if (seq.kind() == IntSeq::Kind::Identity) return "n";
  return json{{"const", int_list_out(seq.values())}};
}

Sign sign_value(const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v == 1) return Sign::Plus;
    if (v == -1) return Sign::Minus;
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+" || s == "+1" || s == "1") return Sign::Plus;
    if (s == "-" || s == "-1") return Sign::Minus;
  }
  throw invalid("signs must be +1 or -1");
}

std::vector<Sign> sign_list(const json& j) {
  if (!j.is_array()) throw invalid("sign list must be an array");
  std::vector<Sign> out;
  for (const json& e : j) out.push_back(sign_value(e));
  return out;
}

json sign_list_out(const std::vector<Sign>& signs) {
  json out = json::array();
  for (Sign s : signs) out.push_back(to_int(s));
  return out;
}

SignSeq signs_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "plus") return SignSeq::all_plus();
    if (s == "alternating") return SignSeq::alternating();
  } else if (j.is_object() && j.size() == 1) {
    if (j.contains("list")) return SignSeq::list(sign_list(j.at("list")));
    if (j.contains("period")) return SignSeq::periodic(sign_list(j.at("period")));
  }
  throw invalid("signs must be \"plus\", \"alternating\", {\"list\": [...]} or {\"period\": [...]}");
}

json signs_out(const SignSeq& s) {
  switch (s.kind()) {
    case SignSeq::Kind::AllPlus: return "plus";
    case SignSeq::Kind::Alternating: return "alternating";
    case SignSeq::Kind::List: return json{{"list", sign_list_out(s.entries())}};
    case SignSeq::Kind::Periodic: return json{{"period", sign_list_out(s.entries())}};
  }
  return nullptr;
}

MuParams pseudo_from(const json& j) {
  if (!j.is_object()) throw invalid("pseudo must be an object");
  reject_unknown(j, {"C", "nu", "terms"}, "pseudo");
  MuParams p;
  if (j.contains("C")) p.C = real_field(j.at("C"), "C");
  if (j.contains("nu")) p.nu = real_field(j.at("nu"), "nu");
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) throw invalid("terms must be an array");
    p.terms.clear();
    for (const json& t : j.at("terms")) {
      if (!t.is_object()) throw invalid("each term must be an object");
      reject_unknown(t, {"c", "r", "s"}, "term");
      PseudoTerm term;
      if (t.contains("c")) term.c = real_field(t.at("c"), "c");
      if (t.contains("r")) term.r = real_field(t.at("r"), "r");
      if (t.contains("s")) term.s = real_field(t.at("s"), "s");
      p.terms.push_back(term);
    }
  }
  p.validate();
  return p;
}

json pseudo_out(const MuParams& p) {
  json terms = json::array();
  for (const PseudoTerm& t : p.terms) terms.push_back({{"c", t.c}, {"r", t.r}, {"s", t.s}});
  return {{"C", p.C}, {"nu", p.nu}, {"terms", terms}};
}

}  // namespace

SeriesSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw invalid("spec must be a JSON object");
  reject_unknown(j, {"variant", "u1", "m", "alpha", "signs", "prefix", "v", "v1", "beta", "gamma", "x_list", "kempner"},
                 "spec");
  if (!j.contains("variant") || !j.at("variant").is_string()) throw invalid("missing string field 'variant'");

  SeriesSpec s;
  s.variant = parse_variant(j.at("variant").get<std::string>());
  if (j.contains("u1")) s.u1 = int_field(j.at("u1"), "u1");
  if (j.contains("m")) s.m = int_field(j.at("m"), "m");
  if (j.contains("alpha")) {
    const json& a = j.at("alpha");
    if (!a.is_object() || a.size() != 1) throw invalid("alpha must be {\"const\": [...]} or {\"pseudo\": {...}}");
    if (a.contains("const")) {
      s.alpha = IntSeq::list(int_list(a.at("const"), "alpha"));
    } else if (a.contains("pseudo")) {
      s.alpha = pseudo_from(a.at("pseudo"));
    } else {
      throw invalid("alpha must be {\"const\": [...]} or {\"pseudo\": {...}}");
    }
  }
  if (j.contains("signs")) s.signs = signs_from(j.at("signs"));
  if (j.contains("prefix")) {
    if (!j.at("prefix").is_string()) throw invalid("prefix must be a string \"p/q\"");
    try {
      s.prefix = Rat::parse(j.at("prefix").get<std::string>());
    } catch (const Error& e) {
      throw invalid(std::string("bad prefix: ") + e.what());
    }
  }
  if (j.contains("v")) s.v = int_seq(j.at("v"), "v");
  if (j.contains("v1")) s.v1 = int_field(j.at("v1"), "v1");
  if (j.contains("beta")) s.beta = int_seq(j.at("beta"), "beta");
  if (j.contains("gamma")) s.gamma = int_seq(j.at("gamma"), "gamma");
  if (j.contains("x_list") && j.contains("kempner")) throw invalid("give either x_list or kempner, not both");
  if (j.contains("x_list")) s.x = int_list(j.at("x_list"), "x_list");
  if (j.contains("kempner")) s.x = KempnerX{int_field(j.at("kempner"), "kempner")};
  s.validate();
  return s;
}

json spec_to_json(const SeriesSpec& s) {
  json j;
  j["variant"] = std::string(variant_name(s.variant));
  switch (s.variant) {
    case Variant::ExplicitX:
      if (const auto* list = std::get_if<std::vector<Int>>(&s.x)) {
        j["x_list"] = int_list_out(*list);
      } else {
        j["kempner"] = int_out(std::get<KempnerX>(s.x).base);
      }
      break;
    case Variant::IndependentUV:
      j["u1"] = int_out(s.u1);
      j["v1"] = int_out(s.v1);
      j["beta"] = int_seq_out(s.beta);
      j["gamma"] = int_seq_out(s.gamma);
      break;
    default:
      j["u1"] = int_out(s.u1);
      j["m"] = int_out(s.m);
      if (const auto* seq = std::get_if<IntSeq>(&s.alpha)) {
        j["alpha"] = {{"const", int_list_out(seq->values())}};
      } else {
        j["alpha"] = {{"pseudo", pseudo_out(std::get<MuParams>(s.alpha))}};
      }
      if (s.variant == Variant::EngelA || s.variant == Variant::EngelB) j["v"] = int_seq_out(s.v);
      break;
  }
  j["signs"] = signs_out(s.signs);
  if (s.prefix) j["prefix"] = s.prefix->str();
  return j;
}

SeriesSpec parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid(std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(j);
}

SeriesSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid("cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

json to_json(const CF& cf) {
  return {{"a0", int_out(cf.a0)}, {"word", int_list_out(cf.word)}, {"length", cf.length()}, {"text", to_string(cf)}};
}

json to_json(const FoldStep& step) {
  return {{"z", int_out(step.z)},
          {"sign", to_int(step.sign)},
          {"concatenations_applied", step.concatenations},
          {"length_before", step.length_before},
          {"length_after", step.length_after},
          {"raw", to_string(step.raw)}};
}

json to_json(const SeriesState& st) {
  json j;
  j["n"] = st.n;
  if (st.u) j["u"] = int_out(*st.u);
  if (st.u_next) j["u_next"] = int_out(*st.u_next);
  if (st.v) j["v"] = int_out(*st.v);
  j["x"] = int_out(st.x);
  j["z"] = int_out(st.z);
  if (st.rho) j["rho"] = int_out(*st.rho);
  if (st.alpha) j["alpha"] = int_out(*st.alpha);
  return j;
}

}  // namespace foldcf
