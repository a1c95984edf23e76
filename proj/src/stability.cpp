#include "monideal/stability.hpp"

#include "monideal/errors.hpp"
#include "monideal/homology.hpp"

namespace monideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw NotProper("zero ideal");
  if (ideal.is_unit()) throw NotProper("unit ideal");
}

}  // namespace

int localized_pd(const MonomialIdeal& ideal, const MonomialPrime& p) {
  return pd_quotient(localize(ideal, p).ideal);
}

StabilityReport is_stable_pd(const MonomialIdeal& ideal, bool exhaustive) {
  require_proper_nonzero(ideal);

  StabilityReport report;
  report.pd = pd_quotient(ideal);
  report.depth = ideal.ring()->n - report.pd;
  report.dim = dim_quotient(ideal);
  report.cm = report.depth == report.dim;
  report.stable = true;

  for_each_prime_at_or_above(ideal, report.pd, [&](const MonomialPrime& p) {
    int pd_at_p = localized_pd(ideal, p);
    report.examined.push_back({p, pd_at_p});
    if (pd_at_p != report.pd) {
      report.stable = false;
      if (!report.witness) report.witness = p;
      return exhaustive;
    }
    return true;
  });
  return report;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  return depth_quotient(ideal) == dim_quotient(ideal);
}

bool is_generalized_cm(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  if (!is_equidimensional(ideal)) return false;
  bool gcm = true;
  for_each_prime_at_or_above(ideal, 0, [&](const MonomialPrime& p) {
    if (p.is_maximal()) return true;
    LocalizedIdeal local = localize(ideal, p);
    if (depth_quotient(local.ideal) != dim_quotient(local.ideal)) {
      gcm = false;
      return false;
    }
    return true;
  });
  return gcm;
}

StabilityReport classify(const MonomialIdeal& ideal, bool exhaustive) {
  StabilityReport report = is_stable_pd(ideal, exhaustive);
  report.gcm = is_generalized_cm(ideal);
  auto ass = associated_primes(ideal);
  report.unmixed = ass == assh(ideal);
  report.ass_eq_min = ass == minimal_primes(ideal);
  return report;
}

}  // namespace monideal
