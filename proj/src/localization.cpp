#include "monideal/localization.hpp"

#include <algorithm>
#include <stdexcept>

#include "monideal/errors.hpp"

namespace monideal {

LocalizedIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& p) {
  require_same_ring(ideal.ring(), p.ring());

  std::vector<int> var_map = p.vars();
  std::vector<std::string> names;
  names.reserve(var_map.size());
  for (int v : var_map) names.push_back(ideal.ring()->names[static_cast<size_t>(v) - 1]);
  RingPtr small = Ring::with_names(std::move(names));

  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) {
    std::vector<int> exps(var_map.size());
    for (size_t i = 0; i < var_map.size(); ++i) exps[i] = g.exp(var_map[i]);
    gens.emplace_back(small, std::move(exps));
  }
  return LocalizedIdeal{p, small, MonomialIdeal::minimize(small, std::move(gens)),
                        std::move(var_map)};
}

bool contains(const MonomialPrime& p, const MonomialIdeal& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  uint32_t prime_mask = 0;
  for (int v : p.vars()) prime_mask |= (1u << (v - 1));
  for (const auto& g : ideal.gens())
    if ((g.support_mask() & prime_mask) == 0) return false;
  return true;
}

namespace {

// Lexicographically ordered size-k subsets of {1..n}.
bool next_combination(std::vector<int>& combo, int n) {
  int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[static_cast<size_t>(i)] < n - (k - 1 - i)) {
      ++combo[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_prime_at_or_above(const MonomialIdeal& ideal, int h,
                                const std::function<bool(const MonomialPrime&)>& visit) {
  int n = ideal.ring()->n;
  if (h < 0 || h > n) throw std::invalid_argument("height bound out of range");
  for (int k = std::max(h, 1); k <= n; ++k) {
    std::vector<int> combo(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<size_t>(i)] = i + 1;
    do {
      MonomialPrime p(ideal.ring(), combo);
      if (contains(p, ideal) && !visit(p)) return;
    } while (next_combination(combo, n));
  }
}

std::vector<MonomialPrime> primes_at_or_above(const MonomialIdeal& ideal, int h) {
  std::vector<MonomialPrime> primes;
  for_each_prime_at_or_above(ideal, h, [&](const MonomialPrime& p) {
    primes.push_back(p);
    return true;
  });
  return primes;
}

}  // namespace monideal
