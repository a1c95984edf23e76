#ifndef MONIDEAL_DECOMPOSITION_HPP
#define MONIDEAL_DECOMPOSITION_HPP

#include <map>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// A monomial prime ideal: a non-empty subset of the variables.
/// Its height is the number of variables.
class MonomialPrime {
 public:
  MonomialPrime(RingPtr ring, std::vector<int> vars);

  static MonomialPrime maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  /// 1-based variable indices, ascending.
  const std::vector<int>& vars() const { return vars_; }
  int height() const { return static_cast<int>(vars_.size()); }
  bool has_var(int i) const;
  bool is_maximal() const { return height() == ring_->n; }
  /// Subset relation on variable sets.
  bool is_subset_of(const MonomialPrime& other) const;

  MonomialIdeal as_ideal() const;
  std::string str() const;

  bool operator==(const MonomialPrime& other) const;
  bool operator!=(const MonomialPrime& other) const { return !(*this == other); }
  /// Height, then lexicographic on variable sets.
  bool operator<(const MonomialPrime& other) const;

 private:
  RingPtr ring_;
  std::vector<int> vars_;
};

/// An irreducible monomial ideal (x_i^{e_i} : i in a variable subset),
/// stored as the map variable -> exponent.
class IrreducibleComponent {
 public:
  IrreducibleComponent(RingPtr ring, std::map<int, int> powers);

  const RingPtr& ring() const { return ring_; }
  const std::map<int, int>& powers() const { return powers_; }

  MonomialIdeal as_ideal() const;
  MonomialPrime radical_prime() const;
  std::string str() const;

  bool operator==(const IrreducibleComponent& other) const;
  bool operator<(const IrreducibleComponent& other) const;

 private:
  RingPtr ring_;
  std::map<int, int> powers_;
};

/// The unique irredundant set of irreducible monomial ideals intersecting
/// to the given proper nonzero ideal, canonically ordered.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Radicals of the irreducible components, deduplicated, sorted.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// Inclusion-minimal primes over the ideal, sorted. Computed directly as
/// the minimal transversals of the generator supports.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

int height(const MonomialIdeal& ideal);
int dim_quotient(const MonomialIdeal& ideal);

/// Associated primes of maximal dimension (height equal to height of the ideal).
std::vector<MonomialPrime> assh(const MonomialIdeal& ideal);

bool is_equidimensional(const MonomialIdeal& ideal);
bool is_unmixed(const MonomialIdeal& ideal);

}  // namespace monideal

#endif
