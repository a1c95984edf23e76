#include "monideal/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "monideal/decomposition.hpp"
#include "monideal/errors.hpp"
#include "monideal/homology.hpp"
#include "monideal/parse.hpp"
#include "monideal/stability.hpp"

namespace monideal {

namespace {

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  if (!current.empty()) names.push_back(current);
  return names;
}

Fixture parse_one(const nlohmann::json& obj) {
  Fixture fixture;
  fixture.name = obj.at("name").get<std::string>();
  if (obj.at("ring").is_string())
    fixture.ring_names = split_names(obj.at("ring").get<std::string>());
  else
    fixture.ring_names = obj.at("ring").get<std::vector<std::string>>();
  fixture.expr = obj.at("expr").get<std::string>();
  if (obj.contains("expect")) {
    const auto& e = obj.at("expect");
    if (e.contains("pd")) fixture.expect.pd = e.at("pd").get<int>();
    if (e.contains("depth")) fixture.expect.depth = e.at("depth").get<int>();
    if (e.contains("dim")) fixture.expect.dim = e.at("dim").get<int>();
    if (e.contains("stable")) fixture.expect.stable = e.at("stable").get<bool>();
    if (e.contains("cm")) fixture.expect.cm = e.at("cm").get<bool>();
    if (e.contains("gcm")) fixture.expect.gcm = e.at("gcm").get<bool>();
    if (e.contains("unmixed")) fixture.expect.unmixed = e.at("unmixed").get<bool>();
    if (e.contains("components"))
      fixture.expect.components = e.at("components").get<std::vector<std::string>>();
  }
  return fixture;
}

template <typename T>
void check_equal(FixtureReport& report, const std::string& name, const T& expected,
                 const T& actual) {
  std::ostringstream detail;
  detail << "expected " << expected << ", got " << actual;
  report.checks.push_back({name, expected == actual, detail.str()});
  if (expected != actual) report.pass = false;
}

}  // namespace

std::vector<Fixture> parse_fixtures(const nlohmann::json& doc) {
  const nlohmann::json& list = doc.is_array() ? doc : doc.at("fixtures");
  std::vector<Fixture> fixtures;
  fixtures.reserve(list.size());
  for (const auto& obj : list) fixtures.push_back(parse_one(obj));
  return fixtures;
}

std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  return parse_fixtures(doc);
}

FixtureReport run_fixture(const Fixture& fixture) {
  FixtureReport report;
  report.name = fixture.name;
  try {
    RingPtr ring = Ring::with_names(fixture.ring_names);
    MonomialIdeal ideal = eval(*parse_expr(fixture.expr, ring), ring);
    const FixtureExpect& expect = fixture.expect;

    if (expect.pd) check_equal(report, "pd", *expect.pd, pd_quotient(ideal));
    if (expect.depth) check_equal(report, "depth", *expect.depth, depth_quotient(ideal));
    if (expect.dim) check_equal(report, "dim", *expect.dim, dim_quotient(ideal));
    if (expect.stable)
      check_equal(report, "stable", *expect.stable, is_stable_pd(ideal).stable);
    if (expect.cm) check_equal(report, "cm", *expect.cm, is_cohen_macaulay(ideal));
    if (expect.gcm) check_equal(report, "gcm", *expect.gcm, is_generalized_cm(ideal));
    if (expect.unmixed) check_equal(report, "unmixed", *expect.unmixed, is_unmixed(ideal));
    if (expect.components) {
      std::vector<std::string> expected = *expect.components;
      std::vector<std::string> canonical;
      for (const auto& text : expected)
        canonical.push_back(eval(*parse_expr(text, ring), ring).str());
      std::sort(canonical.begin(), canonical.end());
      std::vector<std::string> actual;
      for (const auto& component : irreducible_decomposition(ideal))
        actual.push_back(component.as_ideal().str());
      std::sort(actual.begin(), actual.end());
      std::ostringstream detail;
      detail << "expected {";
      for (const auto& s : canonical) detail << s << " ";
      detail << "}, got {";
      for (const auto& s : actual) detail << s << " ";
      detail << "}";
      bool pass = canonical == actual;
      report.checks.push_back({"components", pass, detail.str()});
      if (!pass) report.pass = false;
    }
  } catch (const std::exception& e) {
    report.pass = false;
    report.error = e.what();
  }
  return report;
}

CorpusReport run_fixture_corpus(const std::vector<Fixture>& fixtures) {
  CorpusReport report;
  report.fixtures.reserve(fixtures.size());
  std::vector<Fixture> ordered = fixtures;
  std::sort(ordered.begin(), ordered.end(),
            [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  for (const auto& fixture : ordered) {
    report.fixtures.push_back(run_fixture(fixture));
    if (!report.fixtures.back().pass) report.all_pass = false;
  }
  return report;
}

nlohmann::ordered_json corpus_report_json(const CorpusReport& report) {
  nlohmann::ordered_json doc;
  doc["all_pass"] = report.all_pass;
  doc["fixtures"] = nlohmann::ordered_json::array();
  for (const auto& fixture : report.fixtures) {
    nlohmann::ordered_json entry;
    entry["name"] = fixture.name;
    entry["pass"] = fixture.pass;
    if (!fixture.error.empty()) entry["error"] = fixture.error;
    entry["checks"] = nlohmann::ordered_json::array();
    for (const auto& check : fixture.checks) {
      nlohmann::ordered_json c;
      c["check"] = check.check;
      c["pass"] = check.pass;
      c["detail"] = check.detail;
      entry["checks"].push_back(std::move(c));
    }
    doc["fixtures"].push_back(std::move(entry));
  }
  return doc;
}

}  // namespace monideal
