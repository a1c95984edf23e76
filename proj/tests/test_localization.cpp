#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monideal/homology.hpp"
#include "monideal/localization.hpp"
#include "monideal/parse.hpp"
#include "oracles.hpp"

using namespace monideal;

namespace {

MonomialIdeal ideal_of(const RingPtr& ring, const std::string& text) {
  return eval(*parse_expr(text, ring), ring);
}

}  // namespace

TEST_CASE("localization drops outside variables") {
  auto ring = Ring::standard(4);
  auto I = ideal_of(ring, "(x1*x2, x2*x3, x3*x4, x1*x4, x1*x3)");
  auto loc = localize(I, MonomialPrime(ring, {1, 2, 3}));
  CHECK(loc.ring->n == 3);
  CHECK(loc.ring->names == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(loc.var_map == std::vector<int>{1, 2, 3});
  CHECK(loc.ideal == eval(*parse_expr("(x1, x3)", loc.ring), loc.ring));
}

TEST_CASE("localization at the maximal ideal is the identity") {
  auto ring = Ring::standard(3);
  auto I = ideal_of(ring, "(x1^2*x2, x3)");
  auto loc = localize(I, MonomialPrime::maximal(ring));
  CHECK(loc.ideal == I);
}

TEST_CASE("localizing two planes at a mixed prime") {
  auto ring = Ring::standard(4);
  auto I = ideal_of(ring, "intersect((x1,x2),(x3,x4))");
  auto loc = localize(I, MonomialPrime(ring, {1, 2, 3}));
  CHECK(loc.ideal == eval(*parse_expr("(x1, x2)", loc.ring), loc.ring));
  CHECK(pd_quotient(loc.ideal) == 2);
}

TEST_CASE("membership in V* uses generators, not the radical support") {
  auto ring = Ring::standard(4);
  auto I = ideal_of(ring, "intersect((x1,x2),(x3,x4))");
  // (x1, x3) meets the support of every variable pair generating I, yet a
  // generator x2*x4 avoids it entirely.
  CHECK_FALSE(contains(MonomialPrime(ring, {1, 3}), I));
  CHECK(contains(MonomialPrime(ring, {1, 2}), I));
  CHECK(contains(MonomialPrime::maximal(ring), I));
}

TEST_CASE("prime enumeration order and cutoff") {
  auto ring = Ring::standard(3);
  auto I = ideal_of(ring, "(x1*x2, x2*x3)");
  auto all = primes_at_or_above(I, 0);
  // Ordered by height then lexicographically on variable sets.
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  for (const auto& p : all) CHECK(contains(p, I));

  auto high = primes_at_or_above(I, 2);
  for (const auto& p : high) CHECK(p.height() >= 2);
  CHECK(high.size() < all.size());

  // Early stop through the callback form.
  int seen = 0;
  for_each_prime_at_or_above(I, 0, [&](const MonomialPrime&) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("random ideals: localization laws") {
  std::mt19937 rng(1123);
  auto ring = Ring::standard(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = testing::random_ideal(rng, ring, 5, 3);
    auto J = testing::random_ideal(rng, ring, 5, 3);
    auto p = testing::random_prime(rng, ring);

    // Localization commutes with intersection and product.
    auto locI = localize(I, p);
    auto locJ = localize(J, p);
    CHECK(localize(intersect(I, J), p).ideal == intersect(locI.ideal, locJ.ideal));
    CHECK(localize(product(I, J), p).ideal == product(locI.ideal, locJ.ideal));

    // Localizing twice along a chain of primes telescopes.
    auto q = testing::random_prime(rng, locI.ring);
    std::vector<int> original_vars;
    for (int v : q.vars()) original_vars.push_back(locI.var_map[static_cast<size_t>(v) - 1]);
    auto direct = localize(I, MonomialPrime(ring, original_vars));
    CHECK(localize(locI.ideal, q).ideal.str() == direct.ideal.str());

    // pd can only drop under localization.
    if (!locI.ideal.is_unit() && !locI.ideal.is_zero())
      CHECK(pd_quotient(locI.ideal) <= pd_quotient(I));
  }
}
