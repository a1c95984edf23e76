#ifndef MONIDEAL_FIXTURE_HPP
#define MONIDEAL_FIXTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monideal/ring.hpp"

namespace monideal {

struct FixtureExpect {
  std::optional<int> pd, depth, dim;
  std::optional<bool> stable, cm, gcm, unmixed;
  /// Irreducible components as ideal expressions, order-insensitive.
  std::optional<std::vector<std::string>> components;
};

/// One corpus entry: a named ideal expression over a declared ring and
/// the expected invariants.
struct Fixture {
  std::string name;
  std::vector<std::string> ring_names;
  std::string expr;
  FixtureExpect expect;
};

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct FixtureReport {
  std::string name;
  bool pass = true;
  std::string error;  // non-empty when the fixture failed to evaluate
  std::vector<CheckResult> checks;
};

struct CorpusReport {
  std::vector<FixtureReport> fixtures;
  bool all_pass = true;
};

std::vector<Fixture> parse_fixtures(const nlohmann::json& doc);
std::vector<Fixture> load_fixtures(const std::string& path);

FixtureReport run_fixture(const Fixture& fixture);
CorpusReport run_fixture_corpus(const std::vector<Fixture>& fixtures);

nlohmann::ordered_json corpus_report_json(const CorpusReport& report);

}  // namespace monideal

#endif
