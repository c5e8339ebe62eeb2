// Command-line front end: Cayley-ball sizes, reflection length, and
// conjugacy-class growth series with CSV/JSON output.
//
// Exit codes: 0 success, 2 usage/parse error, 3 element budget exceeded.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccgrowth/errors.hpp"
#include "ccgrowth/group_spec.hpp"
#include "ccgrowth/growth.hpp"
#include "ccgrowth/movement.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ccgrowth;

// Output is accumulated in full and flushed only on success, so a failed
// run never leaves partial CSV/JSON behind.
void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::string run_ball(const std::string& spec_text, int radius,
                     const std::string& format, std::size_t budget) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  AnyGroup any = build_group(parse_group_spec(spec_text));
  return std::visit(
      [&](const auto& group) -> std::string {
        auto ball = ball_enumerate(group, radius, budget);
        auto counts = ball.counts();
        if (format == "csv") return series_to_csv(counts);
        ordered_json j;
        j["schema"] = 1;
        j["group"] = group.label();
        j["counts"] = counts;
        return j.dump(2) + "\n";
      },
      any);
}

std::string run_rlen(const std::string& spec_text, const std::string& word_text) {
  GroupSpec spec = parse_group_spec(spec_text);
  if (spec.kind != GroupSpec::Kind::Affine)
    throw std::invalid_argument("reflection length requires a Coxeter group");
  auto group = AffineCoxeterGroup::build(spec.type, spec.rank);
  auto w = evaluate_word(group, tokenize_word(word_text));
  return std::to_string(dimension_profile(group, w).reflection_length) + "\n";
}

std::string run_class_growth(const std::string& spec_text,
                             const std::string& word_text, int n_max,
                             const std::string& format, std::size_t budget) {
  if (n_max < 1) throw std::invalid_argument("series length must be at least 1");
  auto tokens = tokenize_word(word_text);
  AnyGroup any = build_group(parse_group_spec(spec_text));
  return std::visit(
      [&](const auto& group) -> std::string {
        using G = std::decay_t<decltype(group)>;
        auto w = evaluate_word(group, tokens);
        auto desc = conjugacy_descriptor(group, w);
        auto series = class_growth_series(group, w, n_max, budget);
        if (format == "csv") return series_to_csv(series.counts);
        ordered_json j;
        j["schema"] = 1;
        j["group"] = group.label();
        j["word"] = tokens;
        j["counts"] = series.counts;
        j["exact_degree"] = exact_degree(desc);
        try {
          j["estimated_degree"] = estimate_degree(series).str();
        } catch (const std::exception&) {
          j["estimated_degree"] = nullptr; // series too short or degenerate
        }
        if constexpr (std::is_same_v<G, AffineCoxeterGroup>) {
          auto elliptic = dimension_profile(group, project_to_finite(w));
          j["reflection_length_of_elliptic_part"] = elliptic.reflection_length;
          j["degree_matches_rlen"] =
              exact_degree(desc) == elliptic.reflection_length;
        }
        return j.dump(2) + "\n";
      },
      any);
}

int run(int argc, char** argv) {
  CLI::App app{"exact word and conjugacy-class growth in virtually abelian groups"};
  app.require_subcommand(1);
  const std::string spec_help =
      "group spec: affine:<TYPE><RANK> | signflip:d=<d> | klein";

  std::string ball_spec, ball_format = "csv", ball_out;
  int ball_n = -1, ball_radius = -1;
  std::size_t ball_budget = kDefaultElementBudget;
  auto* ball = app.add_subcommand("ball", "cumulative ball sizes |B(0)|..|B(n)|");
  ball->add_option("spec", ball_spec, spec_help)->required();
  auto* ball_n_opt = ball->add_option("n", ball_n, "ball radius");
  auto* ball_r_opt =
      ball->add_option("--radius", ball_radius, "ball radius (alternative to n)");
  ball->add_option("--format", ball_format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  ball->add_option("--budget", ball_budget,
                   "maximum number of elements to enumerate");
  ball->add_option("--out", ball_out, "write output to a file instead of stdout");

  std::string rlen_spec, rlen_word, rlen_out;
  auto* rlen = app.add_subcommand("rlen", "reflection length of a word");
  rlen->add_option("spec", rlen_spec, spec_help)->required();
  rlen->add_option("word", rlen_word, "generators separated by spaces, e.g. \"s0 s1\"")
      ->required();
  rlen->add_option("--out", rlen_out, "write output to a file instead of stdout");

  std::string cg_spec, cg_word, cg_format = "json", cg_out;
  int cg_n = -1;
  std::size_t cg_budget = kDefaultElementBudget;
  auto* cg = app.add_subcommand("class-growth",
                                "growth series of a conjugacy class");
  cg->add_option("spec", cg_spec, spec_help)->required();
  cg->add_option("word", cg_word, "word whose class to grow")->required();
  auto* cg_n_opt = cg->add_option("N", cg_n, "maximum radius of the series");
  auto* cg_r_opt =
      cg->add_option("--radius", cg_n, "maximum radius (alternative to N)");
  cg->add_option("--format", cg_format, "output format (default json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cg->add_option("--budget", cg_budget,
                 "maximum number of elements to enumerate");
  cg->add_option("--out", cg_out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (ball->parsed()) {
    if (ball_n_opt->count() + ball_r_opt->count() != 1)
      throw std::invalid_argument(
          "give the radius exactly once: positional n or --radius");
    int radius = ball_n_opt->count() ? ball_n : ball_radius;
    write_output(run_ball(ball_spec, radius, ball_format, ball_budget), ball_out);
  } else if (rlen->parsed()) {
    write_output(run_rlen(rlen_spec, rlen_word), rlen_out);
  } else if (cg->parsed()) {
    if (cg_n_opt->count() + cg_r_opt->count() != 1)
      throw std::invalid_argument(
          "give the series length exactly once: positional N or --radius");
    write_output(run_class_growth(cg_spec, cg_word, cg_n, cg_format, cg_budget),
                 cg_out);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceLimitError& e) {
    std::fprintf(stderr, "error: %s; raise --budget to allow more\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
