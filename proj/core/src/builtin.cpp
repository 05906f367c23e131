#include "foldcf/builtin.hpp"

#include "foldcf/error.hpp"

namespace foldcf {

std::vector<std::string> builtin_names() { return {"lur1", "altlur2", "zjisj", "kempner:<u>"}; }

SeriesSpec builtin_example(std::string_view name) {
  SeriesSpec s;
  if (name == "lur1") {
    s.variant = Variant::LurothA;
    s.u1 = 3;
    s.m = 1;
    s.alpha = IntSeq::constant(Int(1));
    s.signs = SignSeq::all_plus();
    return s;
  }
  if (name == "altlur2") {
    s.variant = Variant::AltLurothB;
    s.u1 = 2;
    s.m = 1;
    s.alpha = IntSeq::constant(Int(1));
    s.signs = SignSeq::alternating();
    return s;
  }
  if (name == "zjisj") {
    s.variant = Variant::IndependentUV;
    s.u1 = 1;
    s.v1 = 1;
    s.beta = IntSeq::identity();
    s.gamma = IntSeq::constant(Int(1));
    s.signs = SignSeq::alternating();
    return s;
  }
  if (name.starts_with("kempner:")) {
    Int base;
    try {
      base = parse_int(name.substr(8));
    } catch (const Error&) {
      throw Error(Errc::UnknownExample, "bad Kempner base in '" + std::string(name) + "'");
    }
    if (base < 2) throw Error(Errc::UnknownExample, "Kempner base must be >= 2");
    s.variant = Variant::ExplicitX;
    s.x = KempnerX{base};
    s.signs = SignSeq::all_plus();
    return s;
  }
  throw Error(Errc::UnknownExample, "no builtin example named '" + std::string(name) + "'");
}

}  // namespace foldcf
