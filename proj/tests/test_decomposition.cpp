#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "monideal/decomposition.hpp"
#include "monideal/errors.hpp"
#include "monideal/parse.hpp"
#include "oracles.hpp"

using namespace monideal;

namespace {

MonomialIdeal ideal_of(const RingPtr& ring, const std::string& text) {
  return eval(*parse_expr(text, ring), ring);
}

std::set<std::string> component_strings(const MonomialIdeal& ideal) {
  std::set<std::string> out;
  for (const auto& c : irreducible_decomposition(ideal)) out.insert(c.as_ideal().str());
  return out;
}

MonomialIdeal intersect_all(const std::vector<IrreducibleComponent>& comps) {
  MonomialIdeal acc = comps.front().as_ideal();
  for (size_t i = 1; i < comps.size(); ++i) acc = intersect(acc, comps[i].as_ideal());
  return acc;
}

}  // namespace

TEST_CASE("decomposition of x(xy,xz,yz)") {
  auto ring = Ring::with_names({"x", "y", "z"});
  auto I = ideal_of(ring, "(x)*(x*y, x*z, y*z)");
  CHECK(component_strings(I) ==
        std::set<std::string>{"(x)", "(y, x^2)", "(z, x^2)", "(z, y)"});
  CHECK(dim_quotient(I) == 2);
  CHECK(height(I) == 1);
  CHECK_FALSE(is_equidimensional(I));
  CHECK_FALSE(is_unmixed(I));
}

TEST_CASE("decomposition requires a proper nonzero ideal") {
  auto ring = Ring::standard(2);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(ring)), NotProper);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(ring)), NotProper);
}

TEST_CASE("associated and minimal primes, small examples") {
  auto ring = Ring::with_names({"x1", "x2", "x3"});
  auto I = ideal_of(ring, "intersect((x1),(x2,x3),(x1^2,x2),(x1^2,x3))");

  auto ass = associated_primes(I);
  std::set<std::string> got;
  for (const auto& p : ass) got.insert(p.str());
  CHECK(got == std::set<std::string>{"(x1)", "(x2, x3)", "(x1, x2)", "(x1, x3)"});

  auto mins = minimal_primes(I);
  got.clear();
  for (const auto& p : mins) got.insert(p.str());
  CHECK(got == std::set<std::string>{"(x1)", "(x2, x3)"});

  CHECK(height(I) == 1);
  CHECK_FALSE(is_unmixed(I));
}

TEST_CASE("assh picks the maximal-dimension associated primes") {
  auto ring = Ring::with_names({"x", "y", "z"});
  auto I = ideal_of(ring, "(x)*(x*y, x*z, y*z)");
  auto top = assh(I);
  REQUIRE(top.size() == 1);
  CHECK(top[0].str() == "(x)");
}

TEST_CASE("prime ideal decomposes as itself") {
  auto ring = Ring::standard(4);
  MonomialPrime p(ring, {1, 3});
  auto comps = irreducible_decomposition(p.as_ideal());
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].as_ideal() == p.as_ideal());
  CHECK(comps[0].radical_prime() == p);
}

TEST_CASE("random ideals: reconstruction and irredundancy") {
  std::mt19937 rng(90210);
  auto ring = Ring::standard(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = testing::random_ideal(rng, ring, 5, 3);
    auto comps = irreducible_decomposition(I);
    REQUIRE(!comps.empty());
    CHECK(intersect_all(comps) == I);

    // No component may be dropped.
    for (size_t skip = 0; skip < comps.size() && comps.size() > 1; ++skip) {
      std::vector<IrreducibleComponent> rest;
      for (size_t i = 0; i < comps.size(); ++i)
        if (i != skip) rest.push_back(comps[i]);
      CHECK(intersect_all(rest) != I);
    }
  }
}

TEST_CASE("random ideals: Ass against the colon oracle, Min inside Ass") {
  std::mt19937 rng(550);
  for (int trial = 0; trial < 30; ++trial) {
    auto ring = Ring::standard(3 + static_cast<int>(rng() % 3));
    auto I = testing::random_ideal(rng, ring, 4, 3);

    auto ass = associated_primes(I);
    CHECK(ass == testing::colon_associated_primes(I));

    auto mins = minimal_primes(I);
    REQUIRE(!mins.empty());
    for (const auto& m : mins) {
      CHECK(std::find(ass.begin(), ass.end(), m) != ass.end());
      for (const auto& other : mins)
        if (other != m) CHECK_FALSE(other.is_subset_of(m));
    }

    int h = height(I);
    CHECK(h == mins.front().height());
    for (const auto& m : mins) CHECK(m.height() >= h);
    CHECK(dim_quotient(I) == ring->n - h);
  }
}
