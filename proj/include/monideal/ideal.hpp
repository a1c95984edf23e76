#ifndef MONIDEAL_IDEAL_HPP
#define MONIDEAL_IDEAL_HPP

#include <string>
#include <vector>

#include "monideal/ring.hpp"

namespace monideal {

/// A monomial ideal held by its unique minimal generating set, canonically
/// sorted (degree, then lexicographic on exponents). Equality is therefore
/// structural. The zero ideal has no generators; the unit ideal is
/// generated by 1.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);

  /// The ideal generated by the given monomials: divisibility-minimal
  /// elements, deduplicated, canonically sorted.
  static MonomialIdeal minimize(RingPtr ring, std::vector<Monomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  /// Ideal containment: other is contained in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// "(g1, g2, ...)"; "(0)" for the zero ideal.
  std::string str() const;

  bool operator==(const MonomialIdeal& other) const;
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

 private:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : u, colon by a single monomial.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
/// Squarefree parts of the generators, minimized.
MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal power(const MonomialIdeal& ideal, int k);

/// Union of the generator supports, 1-based, ascending.
std::vector<int> support(const MonomialIdeal& ideal);
uint32_t support_mask(const MonomialIdeal& ideal);

}  // namespace monideal

#endif
