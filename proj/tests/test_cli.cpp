#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using hatgame::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    const Run pair = run({"eval", "--strategies", temp_file("cli_pair.json", R"({"n":2,"f":[1,2,1,2],"g":[1,2,1,2]})")});
    CHECK(pair.code == 0);
    CHECK(pair.out.find("w = 1/4, u = 5/16") == 0);
    CHECK(pair.out.find("u 0.3125") != std::string::npos);

    const Run constant = run({"eval", "--strategies", temp_file("cli_const.json", R"({"n":3,"f":[1,1,1,1,1,1,1,1],"g":[2,2,2,2,2,2,2,2]})")});
    CHECK(constant.code == 0);
    CHECK(constant.out.find("w = 0, u = 1/4") == 0);

    const Run bad = run({"eval", "--strategies", temp_file("cli_bad.json", R"({"n":2,"f":[1,2,0,1],"g":[1,1,1,1]})")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("f[2]") != std::string::npos);

    CHECK(run({"eval", "--strategies", "/nonexistent.json"}).code == 2);
  }

  TEST_CASE("brute") {
    const Run u1 = run({"brute", "--n", "1"});
    CHECK(u1.code == 0);
    CHECK(u1.out.find("U_1 = 1/4") == 0);

    const std::string path = (std::filesystem::temp_directory_path() / "cli_brute2.json").string();
    const Run u2 = run({"brute", "--n", "2", "--out", path});
    CHECK(u2.out.find("U_2 = 5/16") == 0);
    CHECK(run({"eval", "--strategies", path}).out.find("u = 5/16") != std::string::npos);

    CHECK(run({"brute", "--n", "4"}).code == 2);
  }

  TEST_CASE("solve writes a strategy file") {
    const std::string path = (std::filesystem::temp_directory_path() / "cli_solve.json").string();
    const Run r = run({"solve", "--n", "3", "--restarts", "8", "--seed", "1", "--out", path});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["n"] == 3);
    CHECK(doc["f"].size() == 8);
    CHECK(run({"solve", "--n", "0"}).code == 2);
  }

  TEST_CASE("bounds") {
    const Run r = run({"bounds", "--report"});
    CHECK(r.code == 0);
    CHECK(r.out.find("U ≤ 0.37406: published 0.37406, recomputed 0.374058905") != std::string::npos);

    const std::string csv = (std::filesystem::temp_directory_path() / "cli_fig.csv").string();
    const std::string json = (std::filesystem::temp_directory_path() / "cli_bounds.json").string();
    CHECK(run({"bounds", "--figure", csv, "--step", "0.125", "--json", json}).code == 0);
    CHECK(slurp(csv) == "pr_a,chang3,improved\n0.125,0.0625,0.0624237695695\n0.25,0.125,0.125\n0.375,0.1875,0.187467258164\n0.5,0.25,0.25\n");
    const auto doc = nlohmann::json::parse(slurp(json));
    CHECK(doc.size() == 2);
    CHECK(doc[1]["branches"][0]["value"] == doctest::Approx(0.485169170625));
    CHECK(run({"bounds", "--step", "0.1"}).code == 2);
  }

  TEST_CASE("verify") {
    const Run r = run({"verify", "--suite", "chang", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("checked 65536, violations 0") != std::string::npos);
    CHECK(run({"verify", "--suite", "nope", "--n", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "bonus", "--n", "6"}).code == 2);

    const Run all = run({"verify", "--suite", "all", "--n", "2", "--samples", "50"});
    CHECK(all.code == 0);
    CHECK(all.out.find("suite halfspace n=2") != std::string::npos);
  }

  TEST_CASE("output does not depend on --threads") {
    const std::vector<std::string> solve{"solve", "--n", "4", "--restarts", "12", "--seed", "5"};
    auto with_threads = [](std::vector<std::string> args, const char* t) {
      args.push_back("--threads");
      args.push_back(t);
      return run(args).out;
    };
    CHECK(with_threads(solve, "1") == with_threads(solve, "3"));
    const std::vector<std::string> verify{"verify", "--suite", "all", "--n", "3", "--samples", "200"};
    CHECK(with_threads(verify, "1") == with_threads(verify, "3"));
  }
}
