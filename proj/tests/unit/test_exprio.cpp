#include "doctest.h"

#include <random>

#include "nowicki/exprio.hpp"
#include "nowicki/random.hpp"

using namespace nowicki;

namespace {

const Algebra kAll[] = {Algebra::Commutative,      Algebra::UVPolynomial,     Algebra::Metabelian,
                        Algebra::MetabelianIdeal,  Algebra::GrassmannVariety, Algebra::WreathModule};

}  // namespace

TEST_SUITE("exprio") {
  TEST_CASE("parse examples") {
    const CommPoly x1 = CommPoly::variable(Alphabet::x(2), 0), x2 = CommPoly::variable(Alphabet::x(2), 1),
                   x3 = CommPoly::variable(Alphabet::x(2), 2), x4 = CommPoly::variable(Alphabet::x(2), 3);
    CHECK(parse("x1*x4 - x2*x3", Algebra::Commutative, 2) == AnyElement(x1 * x4 - x2 * x3));
    CHECK(parse("[x2,x1,x3]", Algebra::Metabelian, 2) == AnyElement(MetaElement::commutator(2, {2, 1, 3})));
    const GrassElement y1 = GrassElement::y(1, 1);
    CHECK(parse("3/2*y1^2", Algebra::GrassmannVariety, 1) == AnyElement(y1 * y1 * Rational(3, 2)));
    CHECK(parse("-x2 + 2 x1", Algebra::Commutative, 1) == parse("2*x1 - x2", Algebra::Commutative, 1));
    CHECK(parse("y1*a1", Algebra::WreathModule, 1) ==
          AnyElement(WreathElement(CommPoly(Alphabet::y(1)), ModuleElement::generator(1, 1, uvar(1, 1)))));
  }

  TEST_CASE("render examples") {
    CHECK(render(parse("x2*x3 - x1*x4", Algebra::Commutative, 2)) == "-x1*x4 + x2*x3");
    CHECK(render(parse("x1*x4 - x2*x3", Algebra::Commutative, 2)) == "x1*x4 - x2*x3");
    CHECK(render(zero_element(Algebra::Metabelian, 2)) == "0");
    CHECK(render(MetaElement::commutator(1, {1, 2})) == "[x1,x2]");
    CHECK(render(parse("y1*x1", Algebra::GrassmannVariety, 1)) == "x1*y1 - [x1,y1]");
  }

  TEST_CASE("parse errors carry a position") {
    try {
      parse("x1 + x5", Algebra::Commutative, 2);
      FAIL("accepted x5 at d = 2");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse("x1 +", Algebra::Commutative, 2), ParseError);
    CHECK_THROWS_AS(parse("1/0*x1", Algebra::Commutative, 2), ParseError);
    CHECK_THROWS_AS(parse("[x1]", Algebra::Metabelian, 2), ParseError);
    CHECK_THROWS_AS(parse("x1", Algebra::MetabelianIdeal, 2), ParseError);
  }

  TEST_CASE("json schema errors carry a pointer") {
    try {
      from_json(R"({"algebra":"comm","d":1,"terms":[{"coeff":"1/0","exponents":[1,0],"comm":[]}]})");
      FAIL("accepted 1/0");
    } catch (const SchemaError& e) {
      CHECK(e.pointer() == "/terms/0/coeff");
    }
    CHECK_THROWS_AS(from_json(R"({"algebra":"comm","d":1,"terms":[{"coeff":"1","exponents":[1],"comm":[]}]})"),
                    SchemaError);
    CHECK_THROWS_AS(from_json(R"({"algebra":"nope","d":1,"terms":[]})"), SchemaError);
    CHECK_THROWS_AS(from_json("not json"), SchemaError);
  }

  TEST_CASE("json layout") {
    const AnyElement e = parse("[x2,x1] + 1/2*x1", Algebra::Metabelian, 1);
    CHECK(to_json(e) ==
          R"({"algebra":"meta","d":1,"terms":[{"coeff":"1/2","exponents":[1,0],"comm":[]},)"
          R"({"coeff":"1","exponents":[0,0],"comm":[[2,1]]}]})");
  }

  TEST_CASE("constant-generator products") {
    const auto p = parse_const_product("alpha(1,3)*u(2)*gamma(1,1)", 3);
    CHECK(p == std::vector{ConstGen::alpha(1, 3), ConstGen::u(2), ConstGen::gamma(1, 1)});
    CHECK_THROWS_AS(parse_const_product("alpha(1,4)", 3), ParseError);
    CHECK_THROWS_AS(parse_const_product("gamma(1,x)", 3), ParseError);
    // Reversed arcs are accepted; straightening applies the antisymmetry.
    const auto reversed = straighten(parse_const_product("alpha(2,1)", 3), 3);
    REQUIRE(reversed.size() == 1);
    CHECK(reversed.coefficient(CanonicalMonomial{{ConstGen::alpha(1, 2)}}) == -1);
  }

  TEST_CASE("random round trips") {
    std::mt19937_64 rng(23);
    for (Algebra a : kAll)
      for (int t = 0; t < 100; ++t) {
        const AnyElement e = random_element(a, 2, 4, 5, rng);
        const std::string text = render(e);
        CHECK_MESSAGE(parse(text, a, 2) == e, text);
        const JsonElement j = from_json(to_json(e, a));
        CHECK(j.algebra == a);
        CHECK(j.d == 2);
        CHECK(j.element == e);
      }
  }
}
