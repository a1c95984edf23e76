#include "monideal/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "monideal/errors.hpp"

namespace monideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw NotProper("zero ideal");
  if (ideal.is_unit()) throw NotProper("unit ideal");
}

}  // namespace

MonomialPrime::MonomialPrime(RingPtr ring, std::vector<int> vars)
    : ring_(std::move(ring)), vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("monomial prime needs at least one variable");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  for (int v : vars_)
    if (v < 1 || v > ring_->n) throw std::invalid_argument("variable index out of range");
}

MonomialPrime MonomialPrime::maximal(RingPtr ring) {
  std::vector<int> vars(static_cast<size_t>(ring->n));
  for (int i = 1; i <= ring->n; ++i) vars[static_cast<size_t>(i) - 1] = i;
  return MonomialPrime(std::move(ring), std::move(vars));
}

bool MonomialPrime::has_var(int i) const {
  return std::binary_search(vars_.begin(), vars_.end(), i);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

MonomialIdeal MonomialPrime::as_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(vars_.size());
  for (int v : vars_) gens.push_back(Monomial::variable(ring_, v));
  return MonomialIdeal::minimize(ring_, std::move(gens));
}

std::string MonomialPrime::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) out << ", ";
    out << ring_->names[static_cast<size_t>(vars_[i]) - 1];
  }
  out << ")";
  return out.str();
}

bool MonomialPrime::operator==(const MonomialPrime& other) const {
  return same_ring(ring_, other.ring_) && vars_ == other.vars_;
}

bool MonomialPrime::operator<(const MonomialPrime& other) const {
  if (vars_.size() != other.vars_.size()) return vars_.size() < other.vars_.size();
  return vars_ < other.vars_;
}

IrreducibleComponent::IrreducibleComponent(RingPtr ring, std::map<int, int> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
  if (powers_.empty()) throw std::invalid_argument("irreducible component needs a variable");
  for (const auto& [v, e] : powers_) {
    if (v < 1 || v > ring_->n) throw std::invalid_argument("variable index out of range");
    if (e < 1) throw std::invalid_argument("exponent must be positive");
  }
}

MonomialIdeal IrreducibleComponent::as_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(powers_.size());
  for (const auto& [v, e] : powers_) gens.push_back(Monomial::variable_power(ring_, v, e));
  return MonomialIdeal::minimize(ring_, std::move(gens));
}

MonomialPrime IrreducibleComponent::radical_prime() const {
  std::vector<int> vars;
  vars.reserve(powers_.size());
  for (const auto& [v, e] : powers_) vars.push_back(v);
  return MonomialPrime(ring_, std::move(vars));
}

std::string IrreducibleComponent::str() const { return as_ideal().str(); }

bool IrreducibleComponent::operator==(const IrreducibleComponent& other) const {
  return same_ring(ring_, other.ring_) && powers_ == other.powers_;
}

bool IrreducibleComponent::operator<(const IrreducibleComponent& other) const {
  if (powers_.size() != other.powers_.size()) return powers_.size() < other.powers_.size();
  return powers_ < other.powers_;
}

namespace {

bool all_pure_powers(const MonomialIdeal& ideal) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [](const Monomial& g) { return g.is_pure_power(); });
}

// Standard splitting: pick the first generator with at least two supported
// variables, split off its first pure-power factor, and recurse.
void split_into_irreducibles(const MonomialIdeal& ideal,
                             std::set<std::vector<std::vector<int>>>& seen,
                             std::vector<IrreducibleComponent>& out) {
  std::vector<std::vector<int>> key;
  key.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) key.push_back(g.exps());
  if (!seen.insert(std::move(key)).second) return;

  for (const auto& g : ideal.gens()) {
    auto supp = g.support();
    if (supp.size() < 2) continue;
    int pivot = supp[0];
    Monomial head = Monomial::variable_power(ideal.ring(), pivot, g.exp(pivot));
    Monomial tail = mono_quotient_saturating(g, head);
    for (const Monomial& extra : {head, tail}) {
      std::vector<Monomial> gens = ideal.gens();
      gens.push_back(extra);
      split_into_irreducibles(MonomialIdeal::minimize(ideal.ring(), std::move(gens)),
                              seen, out);
    }
    return;
  }

  std::map<int, int> powers;
  for (const auto& g : ideal.gens()) powers[g.support()[0]] = g.degree();
  out.emplace_back(ideal.ring(), std::move(powers));
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);

  std::vector<IrreducibleComponent> components;
  std::set<std::vector<std::vector<int>>> seen;
  split_into_irreducibles(ideal, seen, components);

  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());

  // Drop components containing the intersection of the others, one at a
  // time, until the set is irredundant.
  bool removed = true;
  while (removed && components.size() > 1) {
    removed = false;
    for (size_t i = 0; i < components.size(); ++i) {
      MonomialIdeal rest = MonomialIdeal::unit(ideal.ring());
      for (size_t j = 0; j < components.size(); ++j)
        if (j != i) rest = intersect(rest, components[j].as_ideal());
      if (components[i].as_ideal().contains(rest)) {
        components.erase(components.begin() + static_cast<long>(i));
        removed = true;
        break;
      }
    }
  }
  return components;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  auto components = irreducible_decomposition(ideal);
  std::vector<MonomialPrime> primes;
  primes.reserve(components.size());
  for (const auto& c : components) primes.push_back(c.radical_prime());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  int n = ideal.ring()->n;
  if (n > 25) throw TooLarge("too many variables for prime enumeration");

  std::vector<uint32_t> supports;
  supports.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) supports.push_back(g.support_mask());

  // Covers of the generator supports, then the inclusion-minimal ones.
  std::vector<uint32_t> covers;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool covering = true;
    for (uint32_t s : supports)
      if ((s & mask) == 0) {
        covering = false;
        break;
      }
    if (covering) covers.push_back(mask);
  }
  std::vector<MonomialPrime> primes;
  for (uint32_t mask : covers) {
    bool minimal = true;
    for (uint32_t other : covers)
      if (other != mask && (other & mask) == other) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<int> vars;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) vars.push_back(i);
    primes.emplace_back(ideal.ring(), std::move(vars));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

int height(const MonomialIdeal& ideal) {
  auto primes = minimal_primes(ideal);
  int h = ideal.ring()->n;
  for (const auto& p : primes) h = std::min(h, p.height());
  return h;
}

int dim_quotient(const MonomialIdeal& ideal) {
  return ideal.ring()->n - height(ideal);
}

std::vector<MonomialPrime> assh(const MonomialIdeal& ideal) {
  int h = height(ideal);
  std::vector<MonomialPrime> result;
  for (const auto& p : associated_primes(ideal))
    if (p.height() == h) result.push_back(p);
  return result;
}

bool is_equidimensional(const MonomialIdeal& ideal) {
  auto primes = minimal_primes(ideal);
  int h = height(ideal);
  return std::all_of(primes.begin(), primes.end(),
                     [h](const MonomialPrime& p) { return p.height() == h; });
}

bool is_unmixed(const MonomialIdeal& ideal) {
  return associated_primes(ideal) == assh(ideal);
}

}  // namespace monideal
