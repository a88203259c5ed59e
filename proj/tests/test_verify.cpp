#include <doctest.h>

#include <stdexcept>

#include "hatgame/game.hpp"
#include "hatgame/verify.hpp"

using namespace hatgame;
using namespace hatgame::verify;

TEST_SUITE("verify") {
  TEST_CASE("exhaustive suites hit their enumeration sizes") {
    CHECK(verify_olem(1).checked == 1);
    const SuiteReport olem2 = verify_olem(2);
    CHECK(olem2.checked == 256);
    CHECK(olem2.passed());

    const SuiteReport chang4 = verify_chang(4);
    CHECK(chang4.checked == 65536);
    CHECK(chang4.violations == 0);
    CHECK(chang4.to_text() == "suite chang n=4: checked 65536, violations 0 (expected count 65536, met)\n");

    CHECK(verify_bonus(3).checked == 256);
    CHECK(verify_bonus(4).passed());
    CHECK(verify_newlemma(3).checked == 81);
    CHECK(verify_newlemma(4).checked == 6561);
    CHECK(verify_newlemma(4).passed());
    CHECK(verify_wht(3).checked == 256);
    CHECK(verify_plancherel(2).checked == 256);
  }

  TEST_CASE("sampled suites") {
    SuiteOptions opt;
    opt.samples = 1000;
    opt.seed = 9;
    CHECK(verify_olem(6, opt).passed());
    CHECK(verify_olem(6, opt).checked == 1000);
    CHECK(verify_wht(6, opt).passed());
    CHECK(verify_plancherel(5, opt).passed());
    CHECK(verify_chang(5, opt).passed());
    CHECK(verify_lemma7(4, 2, 0.2, opt).passed());
    CHECK(verify_lemma7(5, 3, 0.24, opt).passed());
  }

  TEST_CASE("lemma7 with k = 1 is reported infeasible") {
    const SuiteReport r = verify_lemma7(3, 1, 0.1);
    CHECK(r.checked == 0);
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("infeasible") == 0);
  }

  TEST_CASE("constant g gives w = 0") {
    const Strategy g = Strategy::constant(3, 1);
    Rng rng(1);
    for (int k = 0; k < 20; ++k) CHECK(eval_direct(Strategy::random(3, rng), g).w.is_zero());
  }

  TEST_CASE("halfspace witnesses") {
    // Dictator {x : x1 = +1} at n = 3: points with bit 0 clear.
    const HalfspaceWitness d = halfspace_witness(3, 0b01010101);
    CHECK(d.is_halfspace);
    CHECK(d.z[0] == Dyadic(1, 1));
    CHECK(d.z[1].is_zero());
    CHECK(halfspace_witness(3, 0).is_halfspace);
    CHECK(!halfspace_witness(3, 0).threshold_scaled.has_value());
    CHECK(halfspace_witness(3, 0xff).is_halfspace);
    // {all +1, all -1} is symmetric, z = 0, not a halfspace.
    CHECK(!halfspace_witness(3, 0b10000001).is_halfspace);

    const SuiteReport h3 = verify_halfspace(3);
    CHECK(h3.passed());
    CHECK(h3.checked == 256);
    CHECK(verify_halfspace(4).passed());
  }

  TEST_CASE("cardinality-4 maximizers at n = 3 are dictators") {
    std::int64_t best = -1;
    std::vector<std::uint64_t> maximizers;
    for (std::uint64_t set = 0; set < 256; ++set) {
      if (__builtin_popcountll(set) != 4) continue;
      std::int64_t mass = 0;
      for (const auto& z : halfspace_witness(3, set).z) mass += (z * z).scaled_to(6);
      if (mass > best) {
        best = mass;
        maximizers.clear();
      }
      if (mass == best) maximizers.push_back(set);
    }
    CHECK(maximizers.size() == 6);
    for (auto set : maximizers) {
      const bool dictator = set == 0x55 || set == 0xaa || set == 0x33 || set == 0xcc || set == 0x0f || set == 0xf0;
      CHECK(dictator);
    }
  }

  TEST_CASE("reports are independent of thread count") {
    SuiteOptions one, four;
    one.threads = 1;
    four.threads = 4;
    one.samples = four.samples = 500;
    CHECK(verify_olem(5, one).to_json() == verify_olem(5, four).to_json());
    CHECK(verify_chang(4, one).to_json() == verify_chang(4, four).to_json());
    CHECK(verify_halfspace(4, one).to_text() == verify_halfspace(4, four).to_text());
  }

  TEST_CASE("out-of-range dimensions are rejected") {
    CHECK_THROWS_AS(verify_chang(7), std::invalid_argument);
    CHECK_THROWS_AS(verify_bonus(5), std::invalid_argument);
    CHECK_THROWS_AS(verify_olem(9), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma7(4, 5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma7(4, 2, 0.3), std::invalid_argument);
  }

  TEST_CASE("json shape") {
    const std::string j = verify_newlemma(2).to_json();
    CHECK(j.find("\"suite\":\"newlemma\"") != std::string::npos);
    CHECK(j.find("\"elapsed_ms\":null") != std::string::npos);
    CHECK(verify_newlemma(2).to_json(true).find("\"elapsed_ms\":null") == std::string::npos);
  }
}
