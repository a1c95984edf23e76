#include "monideal/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "monideal/errors.hpp"

namespace monideal {

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  auto u = Monomial::one(ring);
  return MonomialIdeal(std::move(ring), {u});
}

MonomialIdeal MonomialIdeal::minimize(RingPtr ring, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_ring(ring, g.ring());
  for (const auto& g : gens)
    if (g.is_one()) return unit(std::move(ring));
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& kept : minimal) {
      // kept has degree <= g, so only kept | g is possible here.
      if (mono_divides(kept, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(g);
  }
  return MonomialIdeal(std::move(ring), std::move(minimal));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(ring_, m.ring());
  for (const auto& g : gens_)
    if (mono_divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].str();
  }
  out << ")";
  return out.str();
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_ring(ring_, other.ring_) && gens_ == other.gens_;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> prods;
  prods.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) prods.push_back(mono_product(u, v));
  return MonomialIdeal::minimize(a.ring(), std::move(prods));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> lcms;
  lcms.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) lcms.push_back(mono_lcm(u, v));
  return MonomialIdeal::minimize(a.ring(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  require_same_ring(ideal.ring(), u.ring());
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens())
    quotients.push_back(mono_quotient_saturating(g, u));
  return MonomialIdeal::minimize(ideal.ring(), std::move(quotients));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> squarefree;
  squarefree.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) {
    std::vector<int> exps(g.exps().size());
    for (size_t i = 0; i < exps.size(); ++i) exps[i] = g.exps()[i] > 0 ? 1 : 0;
    squarefree.emplace_back(ideal.ring(), std::move(exps));
  }
  return MonomialIdeal::minimize(ideal.ring(), std::move(squarefree));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be positive");
  MonomialIdeal result = ideal;
  for (int i = 1; i < k; ++i) result = product(result, ideal);
  return result;
}

std::vector<int> support(const MonomialIdeal& ideal) {
  uint32_t mask = support_mask(ideal);
  std::vector<int> vars;
  for (int i = 1; i <= ideal.ring()->n; ++i)
    if (mask & (1u << (i - 1))) vars.push_back(i);
  return vars;
}

uint32_t support_mask(const MonomialIdeal& ideal) {
  uint32_t mask = 0;
  for (const auto& g : ideal.gens()) mask |= g.support_mask();
  return mask;
}

}  // namespace monideal
