#include "monideal/polymatroidal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "monideal/errors.hpp"

namespace monideal {

bool is_polymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw NotProper("polymatroidal test needs a proper nonzero ideal");
  int d = ideal.gens()[0].degree();
  for (const auto& g : ideal.gens())
    if (g.degree() != d) return false;

  int n = ideal.ring()->n;
  for (const auto& u : ideal.gens()) {
    for (const auto& v : ideal.gens()) {
      if (u == v) continue;
      for (int i = 1; i <= n; ++i) {
        if (u.exp(i) <= v.exp(i)) continue;
        bool exchanged = false;
        for (int j = 1; j <= n && !exchanged; ++j) {
          if (u.exp(j) >= v.exp(j)) continue;
          std::vector<int> exps = u.exps();
          exps[static_cast<size_t>(i) - 1] -= 1;
          exps[static_cast<size_t>(j) - 1] += 1;
          exchanged = ideal.contains(Monomial(ideal.ring(), exps));
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

namespace {

void enumerate_bounded(const VeroneseParams& params, const RingPtr& ring, size_t var,
                       int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var + 1 == exps.size()) {
    if (remaining <= params.bounds[var]) {
      exps[var] = remaining;
      out.emplace_back(ring, exps);
    }
    return;
  }
  for (int e = 0; e <= std::min(params.bounds[var], remaining); ++e) {
    exps[var] = e;
    enumerate_bounded(params, ring, var + 1, remaining - e, exps, out);
  }
}

void validate(const VeroneseParams& params) {
  if (params.d < 1) throw std::invalid_argument("Veronese degree must be positive");
  if (params.bounds.empty()) throw std::invalid_argument("Veronese needs at least one bound");
  for (int a : params.bounds)
    if (a < 1 || a > params.d)
      throw std::invalid_argument("Veronese bounds must satisfy 1 <= a_i <= d");
}

}  // namespace

MonomialIdeal veronese(const VeroneseParams& params, RingPtr ring) {
  validate(params);
  if (static_cast<int>(params.bounds.size()) != ring->n)
    throw RingMismatch("Veronese bounds length does not match ring");
  int total = std::accumulate(params.bounds.begin(), params.bounds.end(), 0);
  if (total < params.d) throw EmptyIdeal("sum of bounds below the degree");
  std::vector<Monomial> gens;
  std::vector<int> exps(params.bounds.size(), 0);
  enumerate_bounded(params, ring, 0, params.d, exps, gens);
  return MonomialIdeal::minimize(std::move(ring), std::move(gens));
}

int veronese_pd(const VeroneseParams& params) {
  validate(params);
  int total = std::accumulate(params.bounds.begin(), params.bounds.end(), 0);
  if (total < params.d) throw EmptyIdeal("sum of bounds below the degree");
  int n = static_cast<int>(params.bounds.size());
  return std::min(n, total - params.d + 1);
}

MonomialIdeal transversal_ideal(const TransversalSpec& spec) {
  if (spec.primes.empty()) throw std::invalid_argument("transversal spec needs at least one prime");
  MonomialIdeal result = spec.primes[0].as_ideal();
  for (size_t i = 1; i < spec.primes.size(); ++i) {
    require_same_ring(result.ring(), spec.primes[i].ring());
    result = product(result, spec.primes[i].as_ideal());
  }
  return result;
}

ComponentGraph component_graph(const TransversalSpec& spec) {
  if (spec.primes.empty()) throw std::invalid_argument("transversal spec needs at least one prime");
  int r = static_cast<int>(spec.primes.size());
  ComponentGraph graph;
  graph.r = r;

  std::vector<int> parent(static_cast<size_t>(r));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)];
    return a;
  };

  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const auto& a = spec.primes[static_cast<size_t>(i)].vars();
      const auto& b = spec.primes[static_cast<size_t>(j)].vars();
      bool share = std::any_of(a.begin(), a.end(), [&](int v) {
        return spec.primes[static_cast<size_t>(j)].has_var(v);
      });
      (void)b;
      if (!share) continue;
      graph.edges.emplace_back(i, j);
      parent[static_cast<size_t>(find(i))] = find(j);
    }
  }

  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < r; ++i) buckets[find(i)].push_back(i);
  for (auto& [root, members] : buckets) graph.components.push_back(std::move(members));
  std::sort(graph.components.begin(), graph.components.end());
  return graph;
}

int transversal_pd(const TransversalSpec& spec) {
  ComponentGraph graph = component_graph(spec);
  uint32_t supp = 0;
  for (const auto& p : spec.primes)
    for (int v : p.vars()) supp |= (1u << (v - 1));
  return static_cast<int>(std::popcount(supp)) - static_cast<int>(graph.components.size());
}

TransversalStability transversal_stability(const TransversalSpec& spec) {
  if (spec.primes.empty()) throw std::invalid_argument("transversal spec needs at least one prime");

  bool all_principal = std::all_of(spec.primes.begin(), spec.primes.end(),
                                   [](const MonomialPrime& p) { return p.height() == 1; });
  if (all_principal) return {true, TransversalStabilityReason::Principal};

  bool prime_power = std::all_of(spec.primes.begin(), spec.primes.end(),
                                 [&](const MonomialPrime& p) { return p == spec.primes[0]; });
  if (prime_power) return {true, TransversalStabilityReason::PrimePower};

  ComponentGraph graph = component_graph(spec);
  uint32_t supp = 0;
  for (const auto& p : spec.primes)
    for (int v : p.vars()) supp |= (1u << (v - 1));
  int n = spec.primes[0].ring()->n;
  if (graph.components.size() == 1 && std::popcount(supp) == n)
    return {true, TransversalStabilityReason::ConnectedFullySupported};

  return {false, TransversalStabilityReason::None};
}

std::string reason_tag(TransversalStabilityReason reason) {
  switch (reason) {
    case TransversalStabilityReason::Principal: return "a";
    case TransversalStabilityReason::PrimePower: return "b";
    case TransversalStabilityReason::ConnectedFullySupported: return "c";
    case TransversalStabilityReason::None: return "none";
  }
  return "none";
}

bool degree2_pure_power_stable(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return false;
  bool degree2 = std::all_of(ideal.gens().begin(), ideal.gens().end(),
                             [](const Monomial& g) { return g.degree() == 2; });
  if (!degree2) return false;
  bool pure_power = std::any_of(ideal.gens().begin(), ideal.gens().end(),
                                [](const Monomial& g) { return g.is_pure_power(); });
  if (!pure_power) return false;
  return is_polymatroidal(ideal);
}

}  // namespace monideal
