#include <random>

#include "doctest.h"
#include "monideal/betti.hpp"
#include "monideal/field.hpp"
#include "monideal/io.hpp"
#include "monideal/repro.hpp"
#include "oracles.hpp"

using namespace monideal;

namespace {

Monomial mono(const Ring& r, std::vector<int> e) { return Monomial(r, std::move(e)); }

}  // namespace

TEST_CASE("monomial parsing") {
  Ring r({"x1", "x2", "y"});
  CHECK(parse_monomial(r, "x1^2*x2") == mono(r, {2, 1, 0}));
  CHECK(parse_monomial(r, " x1 * y ") == mono(r, {1, 0, 1}));
  CHECK(parse_monomial(r, "1") == Monomial::unit(r));
  CHECK(parse_monomial(r, "x1*x1") == mono(r, {2, 0, 0}));
  CHECK(parse_monomial(r, "1*x2") == mono(r, {0, 1, 0}));

  CHECK_THROWS_AS(parse_monomial(r, ""), ParseError);
  CHECK_THROWS_AS(parse_monomial(r, "z"), ParseError);
  CHECK_THROWS_AS(parse_monomial(r, "x1^"), ParseError);
  CHECK_THROWS_AS(parse_monomial(r, "x1^0"), ParseError);
  CHECK_THROWS_AS(parse_monomial(r, "x1**x2"), ParseError);
  CHECK_THROWS_AS(parse_monomial(r, "x1 x2"), ParseError);
}

TEST_CASE("monomial formatting") {
  Ring r({"x1", "x2", "y"});
  CHECK(format_monomial(Monomial::unit(r)) == "1");
  CHECK(format_monomial(mono(r, {2, 0, 1})) == "x1^2*y");
  CHECK(format_monomial(mono(r, {0, 1, 0})) == "x2");
}

TEST_CASE("parse errors carry positions") {
  Ring r({"x1"});
  try {
    parse_monomial(r, "x1^&");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }

  try {
    parse_ideal_text("vars: x1\n# ok\nx1*z\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  try {
    parse_ideal_json("{\"vars\": [\"x\"],\n \"gens\": [[oops]]}");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("ideal text round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Ring r = Ring::with_prefix("x", 1 + static_cast<int>(rng() % 4));
    MonomialIdeal I = oracles::random_ideal(r, rng, 5, 3, false);
    CHECK(parse_ideal_text(format_ideal_text(I)) == I);
  }
}

TEST_CASE("ideal json round trip") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    Ring r = Ring::with_prefix("x", 1 + static_cast<int>(rng() % 4));
    MonomialIdeal I = oracles::random_ideal(r, rng, 5, 3, false);
    CHECK(parse_ideal_json(format_ideal_json(I)) == I);
    CHECK(parse_ideal_json(format_ideal_json(I, true)) == I);
  }
}

TEST_CASE("ideal text format details") {
  MonomialIdeal parsed = parse_ideal_text(
      "# a comment\n"
      "vars: x1, x2, x3\n"
      "\n"
      "x1*x2\n"
      "x2*x3\n"
      "x1^2\n");
  Ring r = parsed.ring();
  CHECK(r.vars() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(parsed == MonomialIdeal(r, {mono(r, {1, 1, 0}), mono(r, {0, 1, 1}),
                                    mono(r, {2, 0, 0})}));

  CHECK_THROWS_AS(parse_ideal_text("x1*x2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("vars: x1 x1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("vars: x1\nx1 x1\n"), ParseError);
}

TEST_CASE("ideal json rejects malformed input") {
  CHECK_THROWS_AS(parse_ideal_json("{"), ParseError);
  CHECK_THROWS_AS(parse_ideal_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_ideal_json(R"({"vars": ["x"], "gens": [[-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_json(R"({"vars": ["x"], "gens": [[1, 2]]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_json(R"({"vars": ["x"]})"), ParseError);
}

TEST_CASE("splitting json") {
  Ring r = Ring::with_prefix("x", 3);
  SplittingMap phi = parse_splitting_json(r, R"({"split": {"x1": 2, "x3": 4}})");
  CHECK(phi.arities() == std::vector<int>{2, 1, 4});

  SplittingMap theta = parse_splitting_json(r, R"({"split": {}, "default": 3})");
  CHECK(theta.arities() == std::vector<int>{3, 3, 3});

  CHECK_THROWS_AS(parse_splitting_json(r, R"({"split": {"z": 2}})"), ParseError);
  CHECK_THROWS_AS(parse_splitting_json(r, R"({"split": {"x1": 0}})"), ParseError);
  CHECK_THROWS_AS(parse_splitting_json(r, R"({"splat": {}})"), ParseError);
}

TEST_CASE("betti table rendering") {
  const MonomialIdeal J = sturmfels_ideal();
  BettiTable t = betti_table(J);
  std::string text = format_betti_table_text(t);
  // degree-3 strand with columns 0..2
  CHECK(text.find("8") != std::string::npos);
  CHECK(text.find("11") != std::string::npos);
  CHECK(text.find("total") != std::string::npos);

  std::string json = format_betti_table_json(t);
  CHECK(json.find("\"entries\"") != std::string::npos);
  CHECK(json.find("\"degree\"") != std::string::npos);

  std::string data_json = format_betti_data_json(betti_numbers(J));
  CHECK(data_json.find("\"multidegree\"") != std::string::npos);
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("q") == Field::rationals());
  Field f2 = Field::parse("Fp:2");
  CHECK(f2.kind == Field::Kind::prime);
  CHECK(f2.p == 2);
  CHECK(Field::parse("fp").p == Field::kDefaultPrime);
  CHECK(Field::parse("Fp:2") == Field::fp(2));
  CHECK_THROWS_AS(Field::parse("R"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("Fp:4"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("Fp:0"), std::invalid_argument);
  CHECK_THROWS_AS(Field::fp(1), std::invalid_argument);
}
