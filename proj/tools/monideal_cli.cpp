#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monideal/decomposition.hpp"
#include "monideal/errors.hpp"
#include "monideal/fixture.hpp"
#include "monideal/homology.hpp"
#include "monideal/localization.hpp"
#include "monideal/parse.hpp"
#include "monideal/polymatroidal.hpp"
#include "monideal/stability.hpp"

namespace {

using namespace monideal;
using nlohmann::ordered_json;

struct Options {
  std::string ring;
  bool json = false;
  bool exhaustive = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

RingPtr make_ring(const Options& opts) {
  if (opts.ring.empty())
    throw CLI::ValidationError("--ring", "a ring declaration is required (e.g. --ring x,y,z)");
  return Ring::with_names(split(opts.ring, ','));
}

MonomialIdeal eval_input(const Options& opts, const RingPtr& ring, const std::string& expr) {
  return eval(*parse_expr(expr, ring), ring);
}

void emit_scalar(const Options& opts, const std::string& key, int value) {
  if (opts.json) {
    ordered_json doc;
    doc[key] = value;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

ordered_json prime_json(const MonomialPrime& p) {
  ordered_json doc = ordered_json::array();
  for (int v : p.vars()) doc.push_back(p.ring()->names[static_cast<size_t>(v) - 1]);
  return doc;
}

ordered_json report_json(const StabilityReport& report) {
  ordered_json doc;
  doc["pd"] = report.pd;
  doc["depth"] = report.depth;
  doc["dim"] = report.dim;
  doc["stable"] = report.stable;
  doc["examined"] = ordered_json::array();
  for (const auto& entry : report.examined) {
    ordered_json e;
    e["prime"] = prime_json(entry.prime);
    e["localized_pd"] = entry.localized_pd;
    doc["examined"].push_back(std::move(e));
  }
  if (report.witness)
    doc["witness"] = prime_json(*report.witness);
  else
    doc["witness"] = nullptr;
  doc["cm"] = report.cm;
  if (report.gcm) doc["gcm"] = *report.gcm;
  if (report.unmixed) doc["unmixed"] = *report.unmixed;
  if (report.ass_eq_min) doc["ass_eq_min"] = *report.ass_eq_min;
  return doc;
}

int localized_pd_of(const StabilityReport& report);

void print_report(const Options& opts, const StabilityReport& report) {
  if (opts.json) {
    std::cout << report_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "pd S/I      = " << report.pd << "\n"
            << "depth S/I   = " << report.depth << "\n"
            << "dim S/I     = " << report.dim << "\n"
            << "stable pd   = " << (report.stable ? "yes" : "no") << "\n";
  if (report.witness)
    std::cout << "witness     = " << report.witness->str() << " (localized pd "
              << localized_pd_of(report) << ")\n";
  std::cout << "CM          = " << (report.cm ? "yes" : "no") << "\n";
  if (report.gcm) std::cout << "gen. CM     = " << (*report.gcm ? "yes" : "no") << "\n";
  if (report.unmixed) std::cout << "unmixed     = " << (*report.unmixed ? "yes" : "no") << "\n";
  if (report.ass_eq_min)
    std::cout << "Ass = Min   = " << (*report.ass_eq_min ? "yes" : "no") << "\n";
  for (const auto& entry : report.examined)
    std::cout << "  examined " << entry.prime.str() << " -> pd " << entry.localized_pd << "\n";
}

int localized_pd_of(const StabilityReport& report) {
  for (const auto& entry : report.examined)
    if (report.witness && entry.prime == *report.witness) return entry.localized_pd;
  return -1;
}

int run(int argc, char** argv) {
  CLI::App app{"Homological invariants of monomial ideals"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--ring", opts.ring, "Comma-separated variable names, e.g. x,y,z");
  app.add_flag("--json", opts.json, "Emit JSON instead of text");
  app.add_flag("--exhaustive", opts.exhaustive, "Do not stop at the first stability witness");

  std::string expr;
  std::string at;
  int veronese_d = 0;
  std::string veronese_bounds;
  std::string transversal_primes;
  std::string corpus_path;

  auto add_expr_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();
    cmd->add_option("expr", expr, "Ideal expression")->required();
    return cmd;
  };

  CLI::App* cmd_pd = add_expr_cmd("pd", "Projective dimension of S/I");
  CLI::App* cmd_depth = add_expr_cmd("depth", "Depth of S/I");
  CLI::App* cmd_dim = add_expr_cmd("dim", "Krull dimension of S/I");
  CLI::App* cmd_betti = add_expr_cmd("betti", "Total Betti numbers of I");
  CLI::App* cmd_decompose = add_expr_cmd("decompose", "Irreducible decomposition");
  CLI::App* cmd_ass = add_expr_cmd("ass", "Associated primes of S/I");
  CLI::App* cmd_min = add_expr_cmd("min", "Minimal primes of I");
  CLI::App* cmd_stable = add_expr_cmd("stable", "Stable projective dimension check");
  CLI::App* cmd_classify = add_expr_cmd("classify", "Full stability/CM report");
  CLI::App* cmd_localize = add_expr_cmd("localize", "Monomial localization I(p)");
  cmd_localize->add_option("--at", at, "Variables of the prime, e.g. x1,x2")->required();

  CLI::App* cmd_veronese = app.add_subcommand("veronese", "Veronese-type ideal");
  cmd_veronese->fallthrough();
  cmd_veronese->add_option("--d", veronese_d, "Degree")->required();
  cmd_veronese->add_option("--bounds", veronese_bounds, "Per-variable bounds, e.g. 2,2,1")
      ->required();

  CLI::App* cmd_transversal = app.add_subcommand("transversal", "Transversal polymatroidal ideal");
  cmd_transversal->fallthrough();
  cmd_transversal->add_option("--primes", transversal_primes, "Primes, e.g. \"x1,x2,x3|x1,x4\"")
      ->required();

  CLI::App* cmd_corpus = app.add_subcommand("corpus", "Run a fixture corpus");
  cmd_corpus->fallthrough();
  cmd_corpus->add_option("path", corpus_path, "Fixture JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_pd->parsed()) {
    auto ring = make_ring(opts);
    emit_scalar(opts, "pd", pd_quotient(eval_input(opts, ring, expr)));
  } else if (cmd_depth->parsed()) {
    auto ring = make_ring(opts);
    emit_scalar(opts, "depth", depth_quotient(eval_input(opts, ring, expr)));
  } else if (cmd_dim->parsed()) {
    auto ring = make_ring(opts);
    emit_scalar(opts, "dim", dim_quotient(eval_input(opts, ring, expr)));
  } else if (cmd_betti->parsed()) {
    auto ring = make_ring(opts);
    BettiTable table = betti_table(eval_input(opts, ring, expr));
    if (opts.json) {
      ordered_json doc;
      doc["pd"] = table.pd_quotient;
      doc["depth"] = table.depth_quotient;
      doc["dim"] = table.dim_quotient;
      doc["total"] = ordered_json::array();
      for (size_t i = 0; i < table.entries_by_degree.size(); ++i)
        doc["total"].push_back(table.total(static_cast<int>(i)));
      ordered_json graded = ordered_json::array();
      for (size_t i = 0; i < table.entries_by_degree.size(); ++i)
        for (const auto& [m, r] : table.entries_by_degree[i]) {
          ordered_json e;
          e["i"] = i;
          e["multidegree"] = m.str();
          e["rank"] = r;
          graded.push_back(std::move(e));
        }
      doc["graded"] = std::move(graded);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "i : beta_i(I)\n";
      for (size_t i = 0; i < table.entries_by_degree.size(); ++i)
        std::cout << i << " : " << table.total(static_cast<int>(i)) << "\n";
      std::cout << "pd S/I = " << table.pd_quotient << ", depth S/I = " << table.depth_quotient
                << ", dim S/I = " << table.dim_quotient << "\n";
    }
  } else if (cmd_decompose->parsed()) {
    auto ring = make_ring(opts);
    auto components = irreducible_decomposition(eval_input(opts, ring, expr));
    if (opts.json) {
      ordered_json doc = ordered_json::array();
      for (const auto& c : components) doc.push_back(c.as_ideal().str());
      std::cout << doc.dump() << "\n";
    } else {
      for (const auto& c : components) std::cout << c.as_ideal().str() << "\n";
    }
  } else if (cmd_ass->parsed() || cmd_min->parsed()) {
    auto ring = make_ring(opts);
    auto ideal = eval_input(opts, ring, expr);
    auto primes = cmd_ass->parsed() ? associated_primes(ideal) : minimal_primes(ideal);
    if (opts.json) {
      ordered_json doc = ordered_json::array();
      for (const auto& p : primes) doc.push_back(prime_json(p));
      std::cout << doc.dump() << "\n";
    } else {
      for (const auto& p : primes) std::cout << p.str() << "\n";
    }
  } else if (cmd_stable->parsed()) {
    auto ring = make_ring(opts);
    print_report(opts, is_stable_pd(eval_input(opts, ring, expr), opts.exhaustive));
  } else if (cmd_classify->parsed()) {
    auto ring = make_ring(opts);
    print_report(opts, classify(eval_input(opts, ring, expr), true));
  } else if (cmd_localize->parsed()) {
    auto ring = make_ring(opts);
    auto ideal = eval_input(opts, ring, expr);
    std::vector<int> vars;
    for (const auto& name : split(at, ',')) {
      int index = ring->index_of(name);
      if (index == 0) throw ParseError("unknown variable '" + name + "'", 1, 1);
      vars.push_back(index);
    }
    LocalizedIdeal local = localize(ideal, MonomialPrime(ring, std::move(vars)));
    if (opts.json) {
      ordered_json doc;
      doc["ring"] = local.ring->names;
      doc["ideal"] = local.ideal.str();
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "S(p) = K[";
      for (size_t i = 0; i < local.ring->names.size(); ++i)
        std::cout << (i ? ", " : "") << local.ring->names[i];
      std::cout << "]\nI(p) = " << local.ideal.str() << "\n";
    }
  } else if (cmd_veronese->parsed()) {
    std::vector<int> bounds;
    for (const auto& part : split(veronese_bounds, ',')) bounds.push_back(std::stoi(part));
    RingPtr ring = opts.ring.empty() ? Ring::standard(static_cast<int>(bounds.size()))
                                     : Ring::with_names(split(opts.ring, ','));
    VeroneseParams params{veronese_d, bounds};
    MonomialIdeal ideal = veronese(params, ring);
    if (opts.json) {
      ordered_json doc;
      doc["ideal"] = ideal.str();
      doc["pd_formula"] = veronese_pd(params);
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << ideal.str() << "\n"
                << "pd S/I (formula) = " << veronese_pd(params) << "\n";
    }
  } else if (cmd_transversal->parsed()) {
    auto ring = make_ring(opts);
    TransversalSpec spec;
    for (const auto& list : split(transversal_primes, '|')) {
      std::vector<int> vars;
      for (const auto& name : split(list, ',')) {
        int index = ring->index_of(name);
        if (index == 0) throw ParseError("unknown variable '" + name + "'", 1, 1);
        vars.push_back(index);
      }
      spec.primes.emplace_back(ring, std::move(vars));
    }
    MonomialIdeal ideal = transversal_ideal(spec);
    TransversalStability verdict = transversal_stability(spec);
    if (opts.json) {
      ordered_json doc;
      doc["ideal"] = ideal.str();
      doc["pd_ideal_formula"] = transversal_pd(spec);
      doc["stable"] = verdict.stable;
      doc["reason"] = reason_tag(verdict.reason);
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << ideal.str() << "\n"
                << "pd I (formula) = " << transversal_pd(spec)
                << ", pd S/I = " << transversal_pd(spec) + 1 << "\n"
                << "stable = " << (verdict.stable ? "yes" : "no") << " (reason "
                << reason_tag(verdict.reason) << ")\n";
    }
  } else if (cmd_corpus->parsed()) {
    CorpusReport report = run_fixture_corpus(load_fixtures(corpus_path));
    if (opts.json) {
      std::cout << corpus_report_json(report).dump(2) << "\n";
    } else {
      for (const auto& fixture : report.fixtures) {
        std::cout << (fixture.pass ? "PASS " : "FAIL ") << fixture.name;
        if (!fixture.error.empty()) std::cout << " (" << fixture.error << ")";
        std::cout << "\n";
        for (const auto& check : fixture.checks)
          if (!check.pass) std::cout << "  " << check.check << ": " << check.detail << "\n";
      }
      std::cout << (report.all_pass ? "all fixtures passed" : "some fixtures failed") << "\n";
    }
    return report.all_pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const monideal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
