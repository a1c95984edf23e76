#ifndef MONIDEAL_HOMOLOGY_HPP
#define MONIDEAL_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

/// A small abstract simplicial complex, faces given as sorted vertex lists.
/// The empty face {} is present iff the complex is non-void; a complex with
/// no faces at all is the void complex.
struct SimplicialComplex {
  std::vector<std::vector<int>> faces;

  /// Downward closure of the given faces (the empty face is always added).
  static SimplicialComplex from_maximal_faces(const std::vector<std::vector<int>>& maximal);
};

/// Exact rank over the rationals of an integer matrix, by fraction-free
/// Gaussian elimination (exact big-integer arithmetic).
int matrix_rank_exact(const std::vector<std::vector<long long>>& m);

/// Dimensions of the reduced homology over a field of characteristic 0,
/// as the map degree -> rank, nonzero entries only. Degree -1 is included
/// (rank 1 exactly when the complex is {{}}).
std::map<int, int> reduced_homology_ranks(const SimplicialComplex& complex);

/// All lcms of nonempty subsets of the generators, canonically sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// Multigraded Betti numbers of the ideal: entries[i] maps multidegrees m
/// to beta_{i,m}(I) > 0. pd/depth/dim refer to the quotient S/I:
/// pd S/I = 1 + max i, depth = n - pd (Auslander-Buchsbaum), dim = n - height.
struct BettiTable {
  /// entries_by_degree[i] lists (m, beta_{i,m}(I)) with positive ranks,
  /// sorted by the canonical monomial order.
  std::vector<std::vector<std::pair<Monomial, int>>> entries_by_degree;
  int pd_quotient = 0;
  int depth_quotient = 0;
  int dim_quotient = 0;

  /// Total Betti number of the ideal in homological degree i.
  int total(int i) const;
  /// beta_{i,m}(I), 0 when absent.
  int rank(int i, const Monomial& m) const;
  /// Largest i with a nonzero entry (pd of the ideal as a module).
  int pd_ideal() const { return pd_quotient - 1; }
};

/// Betti numbers via upper-Koszul simplicial homology: for each m in the
/// lcm lattice, beta_{i,m}(I) is the reduced homology rank in degree i-1
/// of the complex of subsets sigma of supp(m) with m / prod(sigma) in I.
BettiTable betti_table(const MonomialIdeal& ideal);

/// pd of the quotient S/I (memoized internally on the canonical form).
int pd_quotient(const MonomialIdeal& ideal);
int depth_quotient(const MonomialIdeal& ideal);

}  // namespace monideal

#endif
