// Test-only independent oracles and random generators. Nothing here may
// call into the code paths it is used to check: Betti numbers come from
// lcm-lattice interval order complexes, associated primes from a colon
// search.
#ifndef MONIDEAL_TESTS_ORACLES_HPP
#define MONIDEAL_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/homology.hpp"
#include "monideal/ideal.hpp"

namespace monideal::testing {

/// Betti numbers of the ideal via the lcm-lattice route: for each lattice
/// element m, beta_{i,m}(I) is the reduced homology rank in degree i-1 of
/// the order complex of the open interval (1, m) in the lcm lattice.
/// Returned as multidegree -> (i -> rank).
inline std::map<std::vector<int>, std::map<int, int>> interval_betti(const MonomialIdeal& ideal) {
  std::vector<Monomial> lattice = lcm_lattice(ideal);
  std::map<std::vector<int>, std::map<int, int>> result;

  for (const auto& m : lattice) {
    // Open interval: lattice elements strictly dividing m.
    std::vector<const Monomial*> interval;
    for (const auto& v : lattice)
      if (v != m && mono_divides(v, m)) interval.push_back(&v);

    // Chains of the interval, enumerated over the divisibility order.
    // lattice is sorted by degree, so divisibility never points backwards.
    std::vector<std::vector<int>> chains;
    chains.push_back({});
    std::vector<int> chain;
    auto extend = [&](auto&& self, size_t from) -> void {
      for (size_t j = from; j < interval.size(); ++j) {
        if (!chain.empty() &&
            !mono_divides(*interval[static_cast<size_t>(chain.back())], *interval[j]))
          continue;
        chain.push_back(static_cast<int>(j));
        chains.push_back(chain);
        self(self, j + 1);
        chain.pop_back();
      }
    };
    extend(extend, 0);

    SimplicialComplex complex;
    complex.faces = std::move(chains);
    for (const auto& [degree, rank] : reduced_homology_ranks(complex))
      result[m.exps()][degree + 1] = rank;
  }
  return result;
}

/// Betti numbers from the implementation's table in the same shape.
inline std::map<std::vector<int>, std::map<int, int>> koszul_betti(const BettiTable& table) {
  std::map<std::vector<int>, std::map<int, int>> result;
  for (size_t i = 0; i < table.entries_by_degree.size(); ++i)
    for (const auto& [m, r] : table.entries_by_degree[i])
      result[m.exps()][static_cast<int>(i)] = r;
  return result;
}

/// Associated primes by colon search: P is associated iff I : u equals P
/// for some monomial u dividing lcm(G(I)) * x_1...x_n.
inline std::vector<MonomialPrime> colon_associated_primes(const MonomialIdeal& ideal) {
  const RingPtr& ring = ideal.ring();
  Monomial bound = Monomial::one(ring);
  for (const auto& g : ideal.gens()) bound = mono_lcm(bound, g);
  std::vector<int> limit = bound.exps();
  for (auto& e : limit) e += 1;

  std::vector<MonomialPrime> primes;
  std::vector<int> exps(limit.size(), 0);
  auto visit = [&](auto&& self, size_t var) -> void {
    if (var == limit.size()) {
      MonomialIdeal quotient = colon(ideal, Monomial(ring, exps));
      if (quotient.is_unit() || quotient.is_zero()) return;
      bool linear = std::all_of(quotient.gens().begin(), quotient.gens().end(),
                                [](const Monomial& g) { return g.degree() == 1; });
      if (!linear) return;
      std::vector<int> vars;
      for (const auto& g : quotient.gens()) vars.push_back(g.support()[0]);
      primes.emplace_back(ring, std::move(vars));
      return;
    }
    for (int e = 0; e <= limit[var]; ++e) {
      exps[var] = e;
      self(self, var + 1);
    }
    exps[var] = 0;
  };
  visit(visit, 0);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

/// Random proper nonzero monomial ideal: up to max_gens generators with
/// exponents <= max_exp in a ring of n variables.
inline MonomialIdeal random_ideal(std::mt19937& rng, const RingPtr& ring, int max_gens,
                                  int max_exp) {
  std::uniform_int_distribution<int> gen_count(1, max_gens);
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  while (true) {
    std::vector<Monomial> gens;
    int count = gen_count(rng);
    for (int g = 0; g < count; ++g) {
      std::vector<int> exps(static_cast<size_t>(ring->n));
      bool nonzero = false;
      for (auto& e : exps) {
        e = std::max(exp_dist(rng) + exp_dist(rng) - max_exp, 0);  // biased low
        nonzero = nonzero || e > 0;
      }
      if (nonzero) gens.emplace_back(ring, std::move(exps));
    }
    if (gens.empty()) continue;
    MonomialIdeal ideal = MonomialIdeal::minimize(ring, std::move(gens));
    if (ideal.is_proper() && !ideal.is_zero()) return ideal;
  }
}

inline MonomialPrime random_prime(std::mt19937& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    std::vector<int> vars;
    for (int i = 1; i <= ring->n; ++i)
      if (coin(rng)) vars.push_back(i);
    if (!vars.empty()) return MonomialPrime(ring, std::move(vars));
  }
}

inline Monomial random_monomial(std::mt19937& rng, const RingPtr& ring, int max_exp) {
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::vector<int> exps(static_cast<size_t>(ring->n));
  for (auto& e : exps) e = exp_dist(rng);
  return Monomial(ring, std::move(exps));
}

}  // namespace monideal::testing

#endif
