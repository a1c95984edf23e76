#ifndef MONIDEAL_POLYMATROIDAL_HPP
#define MONIDEAL_POLYMATROIDAL_HPP

#include <string>
#include <vector>

#include "monideal/decomposition.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Parameters of a Veronese-type ideal: all degree-d monomials with
/// per-variable exponent bounds 1 <= a_i <= d.
struct VeroneseParams {
  int d;
  std::vector<int> bounds;
};

/// Transversal polymatroidal ideal: a product of monomial primes, order
/// kept, repeats allowed.
struct TransversalSpec {
  std::vector<MonomialPrime> primes;
};

/// Graph on the prime factors: {i, j} is an edge when the primes share a
/// variable. components is the partition into connected components
/// (0-based factor indices, each sorted).
struct ComponentGraph {
  int r = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> components;
};

/// Exchange property over all ordered generator pairs; false when the
/// generators are not all of one degree.
bool is_polymatroidal(const MonomialIdeal& ideal);

MonomialIdeal veronese(const VeroneseParams& params, RingPtr ring);

/// pd S/I of the Veronese-type ideal: min(n, sum a_i - d + 1).
int veronese_pd(const VeroneseParams& params);

MonomialIdeal transversal_ideal(const TransversalSpec& spec);
ComponentGraph component_graph(const TransversalSpec& spec);

/// pd of the transversal ideal as a module: |supp(I)| - s, where s is the
/// number of components of its graph. pd S/I is one more.
int transversal_pd(const TransversalSpec& spec);

enum class TransversalStabilityReason { Principal, PrimePower, ConnectedFullySupported, None };

struct TransversalStability {
  bool stable = false;
  TransversalStabilityReason reason = TransversalStabilityReason::None;
};

/// Trichotomy for stable projective dimension of a transversal ideal:
/// (a) all factors principal, (b) a power of one prime, (c) connected
/// graph and fully supported. The first matching clause is reported.
TransversalStability transversal_stability(const TransversalSpec& spec);

std::string reason_tag(TransversalStabilityReason reason);

/// Polymatroidal, generated in degree 2, with some pure power x_i^2 among
/// the generators.
bool degree2_pure_power_stable(const MonomialIdeal& ideal);

}  // namespace monideal

#endif
