#include "monideal/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "monideal/errors.hpp"

namespace monideal {

RingPtr Ring::standard(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return with_names(std::move(names));
}

RingPtr Ring::with_names(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable name: " + name);
  }
  auto ring = std::make_shared<Ring>();
  ring->n = static_cast<int>(names.size());
  ring->names = std::move(names);
  return ring;
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < n; ++i)
    if (names[static_cast<size_t>(i)] == name) return i + 1;
  return 0;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands live in different rings");
}

Monomial::Monomial(RingPtr ring, std::vector<int> exps)
    : ring_(std::move(ring)), exps_(std::move(exps)) {
  if (!ring_) throw std::invalid_argument("null ring");
  if (static_cast<int>(exps_.size()) != ring_->n)
    throw std::invalid_argument("exponent vector length does not match ring");
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(RingPtr ring) {
  std::vector<int> exps(static_cast<size_t>(ring->n), 0);
  return Monomial(std::move(ring), std::move(exps));
}

Monomial Monomial::variable(RingPtr ring, int i) {
  return variable_power(std::move(ring), i, 1);
}

Monomial Monomial::variable_power(RingPtr ring, int i, int e) {
  if (i < 1 || i > ring->n) throw std::invalid_argument("variable index out of range");
  if (e < 1) throw std::invalid_argument("exponent must be positive");
  std::vector<int> exps(static_cast<size_t>(ring->n), 0);
  exps[static_cast<size_t>(i) - 1] = e;
  return Monomial(std::move(ring), std::move(exps));
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_pure_power() const {
  int positive = 0;
  for (int e : exps_)
    if (e > 0) ++positive;
  return positive == 1;
}

std::vector<int> Monomial::support() const {
  std::vector<int> vars;
  for (int i = 1; i <= ring_->n; ++i)
    if (exp(i) > 0) vars.push_back(i);
  return vars;
}

uint32_t Monomial::support_mask() const {
  uint32_t mask = 0;
  for (int i = 1; i <= ring_->n; ++i)
    if (exp(i) > 0) mask |= (1u << (i - 1));
  return mask;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= ring_->n; ++i) {
    int e = exp(i);
    if (e == 0) continue;
    if (!first) out << "*";
    out << ring_->names[static_cast<size_t>(i) - 1];
    if (e > 1) out << "^" << e;
    first = false;
  }
  return out.str();
}

bool Monomial::operator==(const Monomial& other) const {
  return same_ring(ring_, other.ring_) && exps_ == other.exps_;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring());
  for (size_t i = 0; i < a.exps().size(); ++i)
    if (a.exps()[i] > b.exps()[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<int> exps(a.exps().size());
  for (size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::max(a.exps()[i], b.exps()[i]);
  return Monomial(a.ring(), std::move(exps));
}

Monomial mono_quotient_saturating(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<int> exps(a.exps().size());
  for (size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::max(a.exps()[i] - b.exps()[i], 0);
  return Monomial(a.ring(), std::move(exps));
}

Monomial mono_product(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<int> exps(a.exps().size());
  for (size_t i = 0; i < exps.size(); ++i)
    exps[i] = a.exps()[i] + b.exps()[i];
  return Monomial(a.ring(), std::move(exps));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  return a.exps() < b.exps();
}

}  // namespace monideal
