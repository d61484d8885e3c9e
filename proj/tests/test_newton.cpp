#include <random>

#include "doctest.h"
#include "monideal/arithmetic.hpp"
#include "monideal/io.hpp"
#include "monideal/newton.hpp"
#include "monideal/repro.hpp"
#include "oracles.hpp"

using namespace monideal;

namespace {

Monomial mono(const Ring& r, std::vector<int> e) { return Monomial(r, std::move(e)); }

}  // namespace

TEST_CASE("newton polyhedron membership, small cases") {
  Ring r = Ring::with_prefix("x", 2);
  MonomialIdeal I(r, {mono(r, {2, 0}), mono(r, {0, 2})});

  // (1,1) is the midpoint of the two exponent vectors
  auto res = in_newton_polyhedron(mono(r, {1, 1}), I);
  CHECK(res.inside);
  REQUIRE(res.certificate.has_value());
  CHECK(certificate_is_valid(*res.certificate, mono(r, {1, 1}), I));

  // generators certify themselves
  for (const auto& g : I.generators()) {
    auto self = in_newton_polyhedron(g, I);
    CHECK(self.inside);
    REQUIRE(self.certificate.has_value());
    CHECK(certificate_is_valid(*self.certificate, g, I));
  }

  // (1,0) is below the lower hull
  CHECK_FALSE(in_newton_polyhedron(mono(r, {1, 0}), I).inside);
  CHECK_FALSE(in_newton_polyhedron(mono(r, {0, 0}), I).inside);
  // anything dominating a generator is inside
  CHECK(in_newton_polyhedron(mono(r, {5, 3}), I).inside);
}

TEST_CASE("certificate weights are a convex combination") {
  Ring r = Ring::with_prefix("x", 3);
  MonomialIdeal I(r, {mono(r, {3, 0, 0}), mono(r, {0, 3, 0}), mono(r, {0, 0, 3})});
  auto res = in_newton_polyhedron(mono(r, {1, 1, 1}), I);
  REQUIRE(res.inside);
  REQUIRE(res.certificate.has_value());
  Rat64 total(0);
  for (const auto& t : res.certificate->terms) {
    CHECK(t.weight > Rat64(0));
    total = total + t.weight;
  }
  CHECK(total == Rat64(1));
}

TEST_CASE("integral closure of powers, closed forms") {
  Ring r = Ring::with_prefix("x", 2);

  MonomialIdeal I(r, {mono(r, {2, 0}), mono(r, {0, 2})});
  CHECK(integral_closure_of_power(I, 1) ==
        MonomialIdeal(r, {mono(r, {2, 0}), mono(r, {1, 1}), mono(r, {0, 2})}));

  MonomialIdeal principal(r, {mono(r, {1, 0})});
  for (int s = 1; s <= 4; ++s)
    CHECK(integral_closure_of_power(principal, s) ==
          MonomialIdeal(r, {mono(r, {s, 0})}));

  // squarefree ideals are integrally closed
  MonomialIdeal sf(r, {mono(r, {1, 0}), mono(r, {0, 1})});
  CHECK(integral_closure_of_power(sf, 1) == sf);
}

TEST_CASE("closure is idempotent on the example square") {
  const MonomialIdeal J = sturmfels_ideal();
  MonomialIdeal closed = integral_closure_of_power(J, 2);
  CHECK(closed.generators().size() == 37);
  CHECK(integral_closure_of_power(closed, 1) == closed);
  CHECK(closed.contains(power(J, 2)));

  // the vector (0,0,1,1,2,2) lies in the Newton polyhedron of J^2
  const Ring& r = J.ring();
  auto res = in_newton_polyhedron(mono(r, {0, 0, 1, 1, 2, 2}), power(J, 2));
  CHECK(res.inside);
  REQUIRE(res.certificate.has_value());
  CHECK(certificate_is_valid(*res.certificate, mono(r, {0, 0, 1, 1, 2, 2}), power(J, 2)));
}

TEST_CASE("membership agrees with brute-force multiplication") {
  std::mt19937 rng(2718);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Ring r = Ring::with_prefix("x", 2 + static_cast<int>(rng() % 2));
    MonomialIdeal I = oracles::random_ideal(r, rng, 3, 3, false);
    int s = 1 + static_cast<int>(rng() % 2);
    MonomialIdeal Is = power(I, s);
    // sample points from a box just past the generator exponents
    std::vector<int> box(r.arity(), 0);
    for (const auto& g : Is.generators())
      for (int j = 0; j < r.arity(); ++j) box[j] = std::max(box[j], g.exponent(j) + 1);
    for (int rep = 0; rep < 6; ++rep) {
      std::vector<int> a(r.arity());
      for (int j = 0; j < r.arity(); ++j)
        a[j] = static_cast<int>(rng() % static_cast<unsigned>(box[j] + 1));
      Monomial m(r, a);
      bool lp = in_newton_polyhedron(m, Is).inside;
      bool brute = oracles::brute_closure_member(m, I, s, 6);
      REQUIRE_MESSAGE(lp == brute,
                      "disagreement at ", format_monomial(m), " for s=", s);
      ++checked;
    }
  }
  CHECK(checked == 150);
}

TEST_CASE("zero and unit inputs") {
  Ring r = Ring::with_prefix("x", 2);
  CHECK_THROWS_AS(in_newton_polyhedron(mono(r, {1, 1}), MonomialIdeal(r)),
                  std::domain_error);
  CHECK_THROWS_AS(integral_closure_of_power(MonomialIdeal(r), 2), std::domain_error);
  CHECK(integral_closure_of_power(MonomialIdeal::unit_ideal(r), 3).is_unit());
  MonomialIdeal I(r, {mono(r, {1, 0})});
  CHECK_THROWS_AS(integral_closure_of_power(I, 0), std::invalid_argument);
}
