#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hatgame/bounds.hpp"
#include "hatgame/game.hpp"
#include "hatgame/strategy_io.hpp"
#include "hatgame/verify.hpp"

namespace hatgame::cli {

namespace {

std::string choices_text(const Strategy& s) {
  std::string out = "[";
  for (std::size_t m = 0; m < s.choices().size(); ++m) {
    if (m) out += ",";
    out += std::to_string(s.choices()[m]);
  }
  return out + "]";
}

void print_value(std::ostream& out, const GameValue& v) {
  out << "w = " << v.w.to_fraction() << ", u = " << v.u.to_fraction() << "\n";
  out << "decimal: w " << bounds::format_decimal(v.w.to_double()) << ", u "
      << bounds::format_decimal(v.u.to_double()) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

struct Config {
  std::string strategies;
  int n = 0;
  std::uint64_t seed = 0;
  int restarts = 64;
  std::uint64_t max_rounds = 1'000'000;
  unsigned threads = 0;
  std::uint64_t samples = 0;
  std::string suite;
  std::string out_path;
  std::string figure_path;
  std::string json_path;
  double step = 1e-4;
  bool report = false;
  bool timing = false;
  int k = 2;
  double eps = 0.2;
};

int cmd_eval(const Config& c, std::ostream& out) {
  StrategyPair pair = parse_strategy_file(c.strategies);
  print_value(out, eval_direct(pair.f, pair.g));
  return kOk;
}

int cmd_solve(const Config& c, std::ostream& out) {
  SolveOptions opt;
  opt.seed = c.seed;
  opt.restarts = c.restarts;
  opt.max_rounds = c.max_rounds;
  opt.threads = c.threads;
  SolveResult r = multi_start_solve(c.n, opt);
  out << "n = " << c.n << ", seed " << c.seed << ", restarts " << r.restarts_used << "\n";
  print_value(out, r.value);
  out << "converged: " << (r.converged ? "yes" : "no") << ", iterations " << r.iterations << "\n";
  out << "f = " << choices_text(r.f) << "\n";
  out << "g = " << choices_text(r.g) << "\n";
  if (!c.out_path.empty()) write_strategy_file(c.out_path, r.f, r.g);
  return kOk;
}

int cmd_brute(const Config& c, std::ostream& out) {
  BruteForceResult r = brute_force_un(c.n, c.threads);
  out << "U_" << c.n << " = " << r.value.u.to_fraction() << "  (decimal "
      << bounds::format_decimal(r.value.u.to_double()) << ", w = " << r.value.w.to_fraction() << ")\n";
  out << "strategies " << r.strategies << ", distinct level-one matrices " << r.distinct_matrices << "\n";
  out << "f = " << choices_text(r.f) << "\n";
  out << "g = " << choices_text(r.g) << "\n";
  if (!c.out_path.empty()) write_strategy_file(c.out_path, r.f, r.g);
  return kOk;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  const bool any_output = c.report || !c.figure_path.empty() || !c.json_path.empty();
  bounds::BoundReport main_report = bounds::main_bound_report();
  bounds::BoundReport improved = bounds::improved_bound_report();
  if (c.report || !any_output) out << main_report.to_text() << "\n" << improved.to_text();
  if (!c.json_path.empty())
    write_text(c.json_path, "[\n" + main_report.to_json() + ",\n" + improved.to_json() + "]\n");
  if (!c.figure_path.empty()) {
    auto rows = bounds::figure_curves(bounds::figure_grid(c.step));
    write_text(c.figure_path, bounds::format_figure_csv(rows));
    out << "figure: " << rows.size() << " rows written to " << c.figure_path << "\n";
  }
  return kOk;
}

using SuiteFn = std::function<verify::SuiteReport(int, const verify::SuiteOptions&)>;

struct SuiteEntry {
  std::string name;
  int lo, hi;
  SuiteFn run;
};

std::vector<SuiteEntry> suite_table(const Config& c) {
  return {
      {"wht", 1, kMaxNaiveDimension, verify::verify_wht},
      {"plancherel", 1, 16, verify::verify_plancherel},
      {"olem", 1, 8, verify::verify_olem},
      {"chang", 1, 6, verify::verify_chang},
      {"bonus", 1, 4, verify::verify_bonus},
      {"newlemma", 1, 4, verify::verify_newlemma},
      {"halfspace", 1, 4, verify::verify_halfspace},
      {"lemma7", 1, 8,
       [k = c.k, eps = c.eps](int n, const verify::SuiteOptions& o) {
         return verify::verify_lemma7(n, k, eps, o);
       }},
  };
}

int cmd_verify(const Config& c, std::ostream& out) {
  verify::SuiteOptions opt{c.samples, c.seed, c.threads};
  std::vector<verify::SuiteReport> reports;
  for (const auto& s : suite_table(c)) {
    if (c.suite != "all" && c.suite != s.name) continue;
    if (c.suite == "all" && (c.n < s.lo || c.n > s.hi || (s.name == "lemma7" && c.k > c.n))) {
      out << "suite " << s.name << " n=" << c.n << ": skipped (supports n in [" << s.lo << ", "
          << s.hi << "])\n";
      continue;
    }
    reports.push_back(s.run(c.n, opt));
    out << reports.back().to_text(c.timing);
  }
  if (!c.json_path.empty()) {
    std::string doc = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) doc += (i ? "," : "") + reports[i].to_json(c.timing);
    write_text(c.json_path, doc + "]\n");
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? kOk : kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier tools for the two-player hat game", "hatgame"};
  app.require_subcommand(1);
  Config c;

  auto* eval = app.add_subcommand("eval", "Exact w and u of a strategy pair");
  eval->add_option("--strategies", c.strategies, "Strategy JSON file")->required();

  auto* solve = app.add_subcommand("solve", "Multi-start alternating best-response search");
  solve->add_option("--n", c.n, "Number of hats")->required()->check(CLI::Range(1, kMaxDirectDimension));
  solve->add_option("--restarts", c.restarts, "Independent restarts")->check(CLI::PositiveNumber);
  solve->add_option("--seed", c.seed, "Base seed");
  solve->add_option("--max-rounds", c.max_rounds, "Round cap per restart")->check(CLI::PositiveNumber);
  solve->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  solve->add_option("--out", c.out_path, "Write the best pair as a strategy file");

  auto* brute = app.add_subcommand("brute", "Exact optimum over all strategy pairs");
  brute->add_option("--n", c.n, "Number of hats")->required()->check(CLI::Range(1, kMaxBruteDimension));
  brute->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  brute->add_option("--out", c.out_path, "Write an optimal pair as a strategy file");

  auto* bnd = app.add_subcommand("bounds", "Recomputed bound constants and figure data");
  bnd->add_flag("--report", c.report, "Print both bound reports");
  auto* figure = bnd->add_option("--figure", c.figure_path, "Write the bound curves as CSV");
  bnd->add_option("--step", c.step, "Grid step for --figure")
      ->check(CLI::Range(1e-7, 0.5))
      ->needs(figure);
  bnd->add_option("--json", c.json_path, "Write both reports as JSON");

  auto* ver = app.add_subcommand("verify", "Brute-force verification suites");
  ver->add_option("--suite", c.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember(
          {"wht", "plancherel", "olem", "chang", "bonus", "newlemma", "halfspace", "lemma7", "all"}));
  ver->add_option("--n", c.n, "Cube dimension")->required()->check(CLI::Range(1, 16));
  ver->add_option("--samples", c.samples, "Samples for sampled suites (0 = suite default)");
  ver->add_option("--seed", c.seed, "Base seed");
  ver->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  ver->add_option("--k", c.k, "lemma7: hats at or above k are rare")->check(CLI::PositiveNumber);
  ver->add_option("--eps", c.eps, "lemma7: bound on Pr{g >= k}");
  ver->add_option("--json", c.json_path, "Write suite reports as JSON");
  ver->add_flag("--timing", c.timing, "Include elapsed time in reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (eval->parsed()) return cmd_eval(c, out);
    if (solve->parsed()) return cmd_solve(c, out);
    if (brute->parsed()) return cmd_brute(c, out);
    if (bnd->parsed()) return cmd_bounds(c, out);
    return cmd_verify(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace hatgame::cli
