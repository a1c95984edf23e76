#ifndef MONIDEAL_RING_HPP
#define MONIDEAL_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace monideal {

/// Ambient polynomial ring context: the number of variables and their
/// names. Variables are identified by 1-based index everywhere; names are
/// I/O sugar only.
struct Ring {
  int n;
  std::vector<std::string> names;

  /// Ring with variables x1..xn.
  static std::shared_ptr<const Ring> standard(int n);
  /// Ring with the given distinct, non-empty variable names.
  static std::shared_ptr<const Ring> with_names(std::vector<std::string> names);

  /// 1-based index of a variable name, or 0 if unknown.
  int index_of(const std::string& name) const;

  bool operator==(const Ring& other) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// A monomial as an exponent vector in a fixed Ring. Immutable.
class Monomial {
 public:
  Monomial(RingPtr ring, std::vector<int> exps);

  static Monomial one(RingPtr ring);
  /// x_i, 1-based.
  static Monomial variable(RingPtr ring, int i);
  /// x_i^e, 1-based.
  static Monomial variable_power(RingPtr ring, int i, int e);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& exps() const { return exps_; }
  /// Exponent of variable i (1-based).
  int exp(int i) const { return exps_[static_cast<size_t>(i) - 1]; }

  int degree() const;
  bool is_one() const;
  /// True iff the monomial is x_i^e for a single variable i.
  bool is_pure_power() const;
  /// Variables with positive exponent, 1-based, ascending.
  std::vector<int> support() const;
  /// Bitmask of the support, bit (i-1) for variable i.
  uint32_t support_mask() const;

  /// Canonical text form: factors in variable order, `^` for exponents
  /// above 1, `*` as separator, `1` for the unit.
  std::string str() const;

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  std::vector<int> exps_;
};

/// Componentwise <=.
bool mono_divides(const Monomial& a, const Monomial& b);
/// Componentwise max.
Monomial mono_lcm(const Monomial& a, const Monomial& b);
/// Componentwise truncated subtraction: max(a_i - b_i, 0).
Monomial mono_quotient_saturating(const Monomial& a, const Monomial& b);
Monomial mono_product(const Monomial& a, const Monomial& b);

/// Total order used for all canonical generator lists: degree first, then
/// lexicographic on exponent vectors.
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace monideal

#endif
