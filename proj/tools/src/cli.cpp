#include "foldcf/cli.hpp"

#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "foldcf/builtin.hpp"
#include "foldcf/cf.hpp"
#include "foldcf/dioph.hpp"
#include "foldcf/error.hpp"
#include "foldcf/expand.hpp"
#include "foldcf/fold.hpp"
#include "foldcf/series.hpp"
#include "foldcf/spec_json.hpp"

namespace foldcf::cli {

using nlohmann::json;

namespace {

struct SpecSource {
  std::string file;
  std::string example;
};

void add_spec_options(CLI::App& cmd, SpecSource& src) {
  auto* file = cmd.add_option("--spec", src.file, "Series spec JSON file");
  auto* example = cmd.add_option("--example", src.example, "Builtin spec name (see `examples --list`)");
  file->excludes(example);
}

SeriesSpec resolve(const SpecSource& src) {
  if (!src.example.empty()) return builtin_example(src.example);
  if (src.file.empty()) throw Error(Errc::InvalidSpec, "one of --spec or --example is required");
  return load_spec_file(src.file);
}

class Printer {
 public:
  Printer(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}
  void operator()(const json& j) const { out_ << j.dump(pretty_ ? 2 : -1) << '\n'; }

 private:
  std::ostream& out_;
  bool pretty_;
};

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json trace_json(const Expansion& ex) {
  json stages = json::array();
  for (const StageRecord& rec : ex.trace.stages) {
    json s = {{"n", rec.n},
              {"cf", to_string(rec.cf)},
              {"length", rec.length},
              {"predicted_length", optional_size(rec.predicted_length)},
              {"value_matches", rec.value_matches}};
    if (rec.step) s["fold"] = to_json(*rec.step);
    stages.push_back(std::move(s));
  }
  return {{"cf", to_string(ex.cf)},
          {"k", ex.trace.k},
          {"length_case", std::string(length_case_name(ex.trace.length_case))},
          {"stages", stages}};
}

json verify_json(const VerifyReport& r) {
  json stages = json::array();
  for (const StageCheck& c : r.stages) {
    stages.push_back({{"n", c.n},
                      {"value_ok", c.value_ok},
                      {"word_ok", c.word_ok},
                      {"determinant_ok", c.determinant_ok},
                      {"length", c.actual_length},
                      {"predicted_length", optional_size(c.predicted_length)},
                      {"length_ok", c.length_ok ? json(*c.length_ok) : json(nullptr)}});
  }
  return {{"ok", r.ok()},
          {"k", r.k},
          {"length_case", std::string(length_case_name(r.length_case))},
          {"stages", stages},
          {"failures", r.failures}};
}

json surd_json(const std::optional<Surd>& s) { return s ? json(s->str()) : json(nullptr); }

json mu_json(const MuReport& r) {
  json j;
  j["variant"] = std::string(variant_name(r.variant));
  j["n_max"] = r.n_max;
  j["generic"] = r.generic;
  if (r.predicted) {
    j["predicted"] = {{"mu", r.predicted->mu}, {"lambda", r.predicted->lambda}, {"closed_form", surd_json(r.predicted->closed)}};
  } else {
    j["predicted"] = nullptr;
  }
  j["label"] = "estimate";
  j["estimate"] = r.estimate;
  j["window_start"] = r.window_start;
  j["window_max"] = r.window_max;
  j["stage_lengths"] = r.stage_lengths;
  json landmarks = json::array();
  for (const Landmark& l : r.landmarks) landmarks.push_back({{"n", l.n}, {"index", l.index}, {"ratio", l.ratio}});
  j["landmarks"] = landmarks;
  j["log_q"] = r.log_q;
  j["ratios"] = r.ratios;
  j["log_u"] = r.log_u;
  return j;
}

Sign parse_sign(const std::string& text) {
  if (text == "+1" || text == "1" || text == "+") return Sign::Plus;
  if (text == "-1" || text == "-") return Sign::Minus;
  throw Error(Errc::ParseError, "sign must be +1 or -1, got '" + text + "'");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions of strong Engel series with signs", "foldcf"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::size_t> budget_flag;
  bool pretty = false;
  app.add_option("--digit-budget", budget_flag, "Maximum decimal digits of any generated integer")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", pretty, "Indent JSON output");

  SpecSource src;
  long n = 0;

  auto* gen = app.add_subcommand("gen", "Generate u, v, x, z, rho as JSON lines");
  add_spec_options(*gen, src);
  gen->add_option("--n", n, "Number of terms")->required()->check(CLI::PositiveNumber);

  bool expand_json = false;
  auto* expand = app.add_subcommand("expand", "Continued fraction of the n-th partial sum");
  add_spec_options(*expand, src);
  expand->add_option("--n", n, "Partial sum index")->required()->check(CLI::PositiveNumber);
  expand->add_flag("--json", expand_json, "Emit the full folding trace as JSON");

  auto* verify = app.add_subcommand("verify", "Check folded expansions against the Euclidean oracle");
  add_spec_options(*verify, src);
  verify->add_option("--n", n, "Largest partial sum index")->required()->check(CLI::PositiveNumber);

  std::string cf_text, z_text, sign_text;
  auto* fold_cmd = app.add_subcommand("fold", "Apply one folding map");
  fold_cmd->add_option("--cf", cf_text, "Continued fraction, e.g. [0;2,1,11,3]")->required();
  fold_cmd->add_option("--z", z_text, "Fold parameter z >= 1")->required();
  fold_cmd->add_option("--sign", sign_text, "+1 or -1")->required();

  std::optional<std::size_t> window;
  auto* mu = app.add_subcommand("mu", "Predicted and estimated irrationality exponent");
  add_spec_options(*mu, src);
  mu->add_option("--n", n, "Number of series terms")->required()->check(CLI::PositiveNumber);
  mu->add_option("--window", window, "First ratio index of the estimator window");

  bool list = false;
  std::string dump;
  auto* examples = app.add_subcommand("examples", "Builtin specs");
  auto* list_opt = examples->add_flag("--list", list, "List builtin names");
  examples->add_option("--dump", dump, "Print the JSON spec of a builtin")->excludes(list_opt);

  // CLI11 wants argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Printer print(out, pretty);
  try {
    GenOptions opts;
    opts.digit_budget = budget_flag.value_or(default_digit_budget());

    if (gen->parsed()) {
      const SeriesSpec spec = resolve(src);
      for (const SeriesState& st : gen_sequences(spec, n, opts)) print(to_json(st));
      return kExitOk;
    }
    if (expand->parsed()) {
      const Expansion ex = expand_series(resolve(src), n, opts);
      if (expand_json) {
        print(trace_json(ex));
      } else {
        out << to_string(ex.cf) << '\n';
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const VerifyReport report = verify_expansion(resolve(src), n, opts);
      print(verify_json(report));
      return report.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (fold_cmd->parsed()) {
      const CF cf = parse_cf(cf_text);
      const Int z = parse_int(z_text);
      const Sign sign = parse_sign(sign_text);
      const FoldResult r = cf.word.empty() ? fold_integer(cf.a0, z, sign) : fold(cf, z, sign);
      out << to_string(r.cf) << '\n';
      print(to_json(r.step));
      return kExitOk;
    }
    if (mu->parsed()) {
      print(mu_json(mu_estimate(resolve(src), n, window, opts)));
      return kExitOk;
    }
    if (examples->parsed()) {
      if (!dump.empty()) {
        print(spec_to_json(builtin_example(dump)));
      } else {
        for (const std::string& name : builtin_names()) out << name << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "foldcf: " << e.what() << '\n';
    return e.code() == Errc::OracleMismatch ? kExitVerifyFailed : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace foldcf::cli
