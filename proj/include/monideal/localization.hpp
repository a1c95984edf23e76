#ifndef MONIDEAL_LOCALIZATION_HPP
#define MONIDEAL_LOCALIZATION_HPP

#include <functional>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Monomial localization I(p): the ideal obtained by substituting 1 for
/// every variable outside p, living in the smaller ring S(p). The smaller
/// ring keeps the original variable names; var_map[i] is the original
/// 1-based index of its variable i+1.
struct LocalizedIdeal {
  MonomialPrime prime;
  RingPtr ring;
  MonomialIdeal ideal;
  std::vector<int> var_map;
};

LocalizedIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Membership of p in V*(I): every generator of I lies in p, i.e. its
/// support meets p's variables.
bool contains(const MonomialPrime& p, const MonomialIdeal& ideal);

/// Visits all monomial primes p in V*(I) with height(p) >= h, ordered by
/// height then lexicographically on variable sets. The visitor returns
/// false to stop the enumeration early.
void for_each_prime_at_or_above(const MonomialIdeal& ideal, int h,
                                const std::function<bool(const MonomialPrime&)>& visit);

std::vector<MonomialPrime> primes_at_or_above(const MonomialIdeal& ideal, int h);

}  // namespace monideal

#endif
