#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "monideal/arithmetic.hpp"
#include "monideal/betti.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/repro.hpp"
#include "monideal/splitting.hpp"
#include "oracles.hpp"

using namespace monideal;

namespace {

Monomial mono(const Ring& r, std::vector<int> e) { return Monomial(r, std::move(e)); }

}  // namespace

TEST_CASE("uniform splitting replicates exponents") {
  Ring r = Ring::with_prefix("x", 2);
  SplittingMap phi = SplittingMap::uniform(r, 2);
  CHECK(phi.target().arity() == 4);
  CHECK(phi.target().vars() ==
        std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x2_2"});

  Monomial image = phi.apply(mono(r, {2, 1}));
  CHECK(image.exponents() == std::vector<int>{2, 2, 1, 1});
  CHECK(image.degree() == 6);
}

TEST_CASE("identity splitting renames variables") {
  Ring r = Ring::with_prefix("x", 3);
  SplittingMap id = SplittingMap::identity(r);
  CHECK(id.target().vars() == std::vector<std::string>{"x1_1", "x2_1", "x3_1"});
  Monomial image = id.apply(mono(r, {1, 0, 2}));
  CHECK(image.exponents() == std::vector<int>{1, 0, 2});
}

TEST_CASE("mixed arities and degree bookkeeping") {
  Ring r = Ring::with_prefix("x", 3);
  SplittingMap phi(r, {1, 3, 2});
  CHECK(phi.target().arity() == 6);
  Monomial m = mono(r, {2, 1, 3});
  Monomial image = phi.apply(m);
  CHECK(image.exponents() == std::vector<int>{2, 1, 1, 1, 3, 3});
  // deg(sigma(m)) = sum_j t_j * a_j
  CHECK(image.degree() == 1 * 2 + 3 * 1 + 2 * 3);
}

TEST_CASE("splitting a squarefree ideal stays squarefree, primes double up") {
  const MonomialIdeal J = sturmfels_ideal();
  std::vector<int> arities = {2, 1, 1, 1, 1, 1};
  SplittingMap sigma(J.ring(), arities);
  MonomialIdeal K = sigma.apply(J);
  CHECK(K.generators().size() == 8);
  CHECK(K.is_squarefree());
  // J has six minimal covers, two of which use x1; each of those admits
  // either x1_1 or x1_2 in the image, so 4 + 2*2 covers
  CHECK(minimal_primes(K).size() == 8);
}

TEST_CASE("lcm lattice is equivariant under splitting") {
  const MonomialIdeal J = sturmfels_ideal();
  SplittingMap sigma(J.ring(), {2, 1, 1, 1, 1, 1});
  auto base = lcm_lattice(J);
  auto image = lcm_lattice(sigma.apply(J));
  REQUIRE(base.size() == image.size());
  // sigma maps the base lattice onto the image lattice
  std::vector<Monomial> mapped;
  mapped.reserve(base.size());
  for (const auto& m : base) mapped.push_back(sigma.apply(m));
  std::sort(mapped.begin(), mapped.end());
  std::vector<Monomial> expected = image;
  std::sort(expected.begin(), expected.end());
  CHECK(mapped == expected);
}

TEST_CASE("transfer matches a direct computation") {
  const MonomialIdeal J = sturmfels_ideal();
  SplittingMap sigma(J.ring(), {2, 1, 1, 1, 1, 1});
  BettiData direct = betti_numbers(sigma.apply(J));
  BettiData transferred = sigma.transfer(betti_numbers(J));
  CHECK(direct == transferred);
  CHECK(sigma.regularity_via_transfer(betti_numbers(J)) == direct.regularity());
}

TEST_CASE("regularity via transfer reproduces recorded splittings") {
  const MonomialIdeal J = sturmfels_ideal();
  // splitting x1 in two: reg(sigma(J)^2) = 9
  SplittingMap s1(J.ring(), {2, 1, 1, 1, 1, 1});
  CHECK(s1.regularity_via_transfer(betti_numbers(power(J, 2))) == 9);
  // splitting x6 in three: reg of the symbolic square is 10
  SplittingMap s6(J.ring(), {1, 1, 1, 1, 1, 3});
  CHECK(s6.regularity_via_transfer(betti_numbers(symbolic_power(J, 2))) == 10);
}

TEST_CASE("splittings commute with powers and Frobenius powers") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    Ring r = Ring::with_prefix("x", 2 + static_cast<int>(rng() % 2));
    MonomialIdeal I = oracles::random_ideal(r, rng, 4, 2, false);
    std::vector<int> arities;
    for (int j = 0; j < r.arity(); ++j)
      arities.push_back(1 + static_cast<int>(rng() % 3));
    SplittingMap sigma(r, arities);
    int s = 2 + static_cast<int>(rng() % 2);
    CHECK(commutes_with(sigma, Construction::power, I, s));
    CHECK(commutes_with(sigma, Construction::frobenius_power, I, s));
  }
}

TEST_CASE("splittings commute with closure and symbolic powers on small input") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 6; ++trial) {
    Ring r = Ring::with_prefix("x", 3);
    MonomialIdeal I = oracles::random_ideal(r, rng, 4, 1, true);
    std::vector<int> arities;
    for (int j = 0; j < r.arity(); ++j)
      arities.push_back(1 + static_cast<int>(rng() % 2));
    SplittingMap sigma(r, arities);
    CHECK(commutes_with(sigma, Construction::closure_of_power, I, 2));
    CHECK(commutes_with(sigma, Construction::symbolic_power, I, 2));
  }
}

TEST_CASE("construction names") {
  CHECK(to_string(Construction::power) == "power");
  CHECK(to_string(Construction::frobenius_power) == "frobenius");
  CHECK(to_string(Construction::closure_of_power) == "closure");
  CHECK(to_string(Construction::symbolic_power) == "symbolic");
}

TEST_CASE("splitting rejects bad arities") {
  Ring r = Ring::with_prefix("x", 2);
  CHECK_THROWS_AS(SplittingMap(r, {1}), std::invalid_argument);
  CHECK_THROWS_AS(SplittingMap(r, {1, 0}), std::invalid_argument);
}
