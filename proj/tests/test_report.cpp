#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "koebe/report.hpp"
#include "koebe/suites.hpp"

using koebe::Relation;

TEST_CASE("relations", "[report]") {
  REQUIRE(koebe::holds(Relation::near, 1.0, 1.05, 0.1));
  REQUIRE_FALSE(koebe::holds(Relation::near, 1.0, 1.2, 0.1));
  REQUIRE(koebe::holds(Relation::below, 1.0, 2.0, 0.0));
  REQUIRE_FALSE(koebe::holds(Relation::below, 2.0, 2.0, 0.0));
  REQUIRE(koebe::holds(Relation::above, 3.0, 2.0, 0.0));
  REQUIRE(koebe::holds(Relation::at_least, 2.0, 2.0, 0.0));
  REQUIRE(koebe::holds(Relation::at_most, 2.05, 2.0, 0.1));
  // printed digits: 0.857583 reads as 0.857, not 0.858
  REQUIRE(koebe::holds(Relation::truncates, 0.857583, 0.857, 1e-3));
  REQUIRE_FALSE(koebe::holds(Relation::truncates, 0.857583, 0.858, 1e-3));
  REQUIRE_FALSE(koebe::holds(Relation::truncates, 0.8569, 0.857, 1e-3));
  REQUIRE(koebe::holds(Relation::equal, 7.0, 7.0, 0.0));
  REQUIRE_FALSE(koebe::holds(Relation::near, std::nan(""), 0.0, 1.0));
  for (Relation r : {Relation::near, Relation::below, Relation::above, Relation::at_most, Relation::at_least,
                     Relation::truncates, Relation::equal})
    REQUIRE(koebe::relation_from_string(koebe::to_string(r)) == r);
  REQUIRE_THROWS_AS(koebe::relation_from_string("approx"), std::invalid_argument);
}

TEST_CASE("reports round-trip through JSON with the same verdicts", "[report]") {
  const koebe::Report rep = koebe::run_suite(koebe::Suite::steps, {1});
  REQUIRE(rep.pass());
  const auto text = koebe::to_json(rep).dump();
  const koebe::Report back = koebe::report_from_json(nlohmann::json::parse(text));
  REQUIRE(back.checks.size() == rep.checks.size());
  const auto re = koebe::recheck(back);
  REQUIRE(re.flips.empty());
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    REQUIRE(re.report.checks[i].pass == rep.checks[i].pass);
    REQUIRE(back.checks[i].observed == rep.checks[i].observed);
  }
}

TEST_CASE("recheck catches an edited verdict and a non-finite value", "[report]") {
  koebe::Report rep{"demo"};
  rep.near("x", 1.0, 1.0, 1e-9);
  rep.add("y", std::numeric_limits<double>::infinity(), 0.0, 0.0, Relation::below);
  REQUIRE_FALSE(rep.pass());
  auto j = koebe::to_json(rep);
  REQUIRE(j["checks"][1]["observed"].is_null());
  j["checks"][0]["pass"] = false;
  const auto re = koebe::recheck(koebe::report_from_json(j));
  REQUIRE(re.flips == std::vector<std::string>{"x"});
  REQUIRE(re.report.checks[0].pass);
  REQUIRE_FALSE(re.report.checks[1].pass);
}

TEST_CASE("suite names", "[report]") {
  REQUIRE(koebe::suite_from_string("lemmas") == koebe::Suite::lemmas);
  REQUIRE_THROWS_AS(koebe::suite_from_string("everything"), std::invalid_argument);
  REQUIRE_THROWS_AS(koebe::run_suite(koebe::Suite::identities, {0}), std::invalid_argument);
}
