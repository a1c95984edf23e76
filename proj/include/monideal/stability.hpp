#ifndef MONIDEAL_STABILITY_HPP
#define MONIDEAL_STABILITY_HPP

#include <optional>
#include <vector>

#include "monideal/localization.hpp"

namespace monideal {

struct ExaminedPrime {
  MonomialPrime prime;
  int localized_pd;
};

/// Verdict of the stable-projective-dimension check, with witnesses and
/// the related Cohen-Macaulayness flags. gcm/unmixed/ass_eq_min are filled
/// by classify() only (they need extra work).
struct StabilityReport {
  int pd = 0;
  int depth = 0;
  int dim = 0;
  bool stable = false;
  std::vector<ExaminedPrime> examined;
  std::optional<MonomialPrime> witness;
  bool cm = false;
  std::optional<bool> gcm;
  std::optional<bool> unmixed;
  std::optional<bool> ass_eq_min;
};

/// pd of S(p)/I(p).
int localized_pd(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Decides whether pd S/I survives monomial localization at every monomial
/// prime in V*(I) of height >= pd S/I. Unless exhaustive, stops at the
/// first witness; examined then ends with the witness.
StabilityReport is_stable_pd(const MonomialIdeal& ideal, bool exhaustive = false);

/// depth S/I = dim S/I.
bool is_cohen_macaulay(const MonomialIdeal& ideal);

/// Equidimensional, and S(p)/I(p) is Cohen-Macaulay for every monomial
/// prime p in V*(I) other than the maximal ideal.
bool is_generalized_cm(const MonomialIdeal& ideal);

/// Full report: stability plus cm, gcm, unmixed, Ass = Min.
StabilityReport classify(const MonomialIdeal& ideal, bool exhaustive = true);

}  // namespace monideal

#endif
