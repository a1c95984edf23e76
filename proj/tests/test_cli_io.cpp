#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "monideal/fixture.hpp"

using namespace monideal;
using nlohmann::json;

namespace {

json corpus_doc() {
  return json::parse(R"json([
    {
      "name": "squares",
      "ring": "x,y",
      "expr": "(x^2, x*y)",
      "expect": { "pd": 2, "depth": 0, "dim": 1, "stable": true, "cm": false }
    },
    {
      "name": "plane",
      "ring": ["x", "y", "z"],
      "expr": "(x)",
      "expect": { "pd": 1, "cm": true, "components": ["(x)"] }
    }
  ])json");
}

}  // namespace

TEST_CASE("fixture parsing accepts both ring spellings") {
  auto fixtures = parse_fixtures(corpus_doc());
  REQUIRE(fixtures.size() == 2);
  CHECK(fixtures[0].ring_names == std::vector<std::string>{"x", "y"});
  CHECK(fixtures[1].ring_names == std::vector<std::string>{"x", "y", "z"});
  CHECK(fixtures[0].expect.pd == 2);
  CHECK(fixtures[1].expect.components->size() == 1);
}

TEST_CASE("corpus runner: all pass") {
  auto report = run_fixture_corpus(parse_fixtures(corpus_doc()));
  CHECK(report.all_pass);
  REQUIRE(report.fixtures.size() == 2);
  // Report is ordered by fixture name.
  CHECK(report.fixtures[0].name == "plane");
  CHECK(report.fixtures[1].name == "squares");
  for (const auto& f : report.fixtures) {
    CHECK(f.pass);
    CHECK(f.error.empty());
    CHECK(!f.checks.empty());
  }
}

TEST_CASE("corpus runner: one perturbed expectation fails exactly once") {
  auto doc = corpus_doc();
  doc[0]["expect"]["pd"] = 7;
  auto report = run_fixture_corpus(parse_fixtures(doc));
  CHECK_FALSE(report.all_pass);

  int failed_fixtures = 0;
  int failed_checks = 0;
  for (const auto& f : report.fixtures) {
    if (!f.pass) ++failed_fixtures;
    for (const auto& c : f.checks)
      if (!c.pass) ++failed_checks;
  }
  CHECK(failed_fixtures == 1);
  CHECK(failed_checks == 1);
}

TEST_CASE("corpus runner: empty corpus succeeds") {
  auto report = run_fixture_corpus({});
  CHECK(report.all_pass);
  CHECK(report.fixtures.empty());
}

TEST_CASE("corpus runner: evaluation errors are reported, not thrown") {
  auto doc = json::parse(R"json([
    { "name": "bad", "ring": "x", "expr": "(x^", "expect": { "pd": 1 } }
  ])json");
  auto report = run_fixture_corpus(parse_fixtures(doc));
  CHECK_FALSE(report.all_pass);
  REQUIRE(report.fixtures.size() == 1);
  CHECK_FALSE(report.fixtures[0].pass);
  CHECK_FALSE(report.fixtures[0].error.empty());
}

TEST_CASE("JSON reports are byte-stable") {
  auto fixtures = parse_fixtures(corpus_doc());
  auto a = corpus_report_json(run_fixture_corpus(fixtures)).dump(2);
  auto b = corpus_report_json(run_fixture_corpus(fixtures)).dump(2);
  CHECK(a == b);
  CHECK(a.find("\"all_pass\"") != std::string::npos);
}
