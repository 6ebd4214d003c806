#include <doctest.h>

#include "bourbaki/roots.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("polyring") {

TEST_CASE("field elements over Q and F_p") {
  const Field Q = Field::rationals();
  const Field F = Field::prime(7);
  CHECK((q(Q, 1, 2) + q(Q, 1, 3)) == q(Q, 5, 6));
  CHECK((q(Q, -2, 4)).to_string() == "-1/2");
  CHECK((q(F, 3) * q(F, 5)).residue() == 1);
  CHECK(q(F, -1).to_string() == "6");
  CHECK(q(F, 3).inverse() == q(F, 5));
  CHECK_THROWS_AS(FieldElement::zero(Q).inverse(), Error);
  CHECK_THROWS_AS(q(F, 1, 7), Error);
  CHECK_THROWS_AS(q(Q, 1) + q(F, 1), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("arithmetic examples") {
  CHECK((P("x") + P("-x")).is_zero());
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P(kNodal) * P("1") == P(kNodal));
  CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("2*x") * q(Field::rationals(), 1, 2) == P("x"));
  CHECK_THROWS_AS(P("x", qq()) + P("x", fp()), Error);
}

TEST_CASE("canonical order and printing") {
  const Polynomial f = P("z^2 + x*z + y^2 + x^2");
  CHECK(f.to_string() == "x^2 + y^2 + x*z + z^2");
  CHECK(f.leading_term().monomial == Monomial{2, 0, 0});
  CHECK(P("3/6*x").to_string() == "1/2*x");
  CHECK(P("0").to_string() == "0");
  CHECK(P(kNodal).degree() == 3);
  CHECK(P(kNodal).is_homogeneous());
  CHECK_FALSE(P("x + 1").is_homogeneous());
}

TEST_CASE("differentiate") {
  CHECK(differentiate(P(kNodal), 0) == P("-3*x^2 - 2*x*z"));
  CHECK(differentiate(P(kNodal), 1) == P("2*y*z"));
  CHECK(differentiate(P("x^5"), 2).is_zero());
  CHECK_THROWS_AS(differentiate(P("x"), 3), Error);
}

TEST_CASE("dehomogenize") {
  const Ring yz(Field::rationals(), "yz");
  const IdealBasis I = ideal({"2*z^2", "y*z", "2*x*z + 3*y^2"});
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) out.push_back(dehomogenize(g, 0));
  CHECK(out[0] == P("2*z^2", yz));
  CHECK(out[1] == P("y*z", yz));
  CHECK(out[2] == P("2*z + 3*y^2", yz));
  CHECK(dehomogenize(P("x^2"), 2) == P("x^2", Ring(Field::rationals(), "xy")));
  CHECK(dehomogenize(P("z^3"), 2) == P("1", Ring(Field::rationals(), "xy")));
}

TEST_CASE("homogenize") {
  const Ring xy(Field::rationals(), "xy");
  CHECK(homogenize(P("x + 1", xy), 2, 1) == P("x + z"));
  CHECK(homogenize(P("y^2", xy), 2, 4) == P("y^2*z^2"));
}

TEST_CASE("translate and evaluate") {
  const Ring xy(Field::rationals(), "xy");
  const Field Q = Field::rationals();
  const std::vector<FieldElement> shift{q(Q, 1), q(Q, 0)};
  CHECK(translate(P("x", xy), shift) == P("x + 1", xy));
  const Polynomial f = P("x^3 - 2*x*y + 5", xy);
  const std::vector<FieldElement> origin{q(Q, 0), q(Q, 0)};
  CHECK(translate(f, origin) == f);

  const std::vector<FieldElement> node{q(Q, 0), q(Q, 0), q(Q, 1)};
  CHECK(evaluate(P(kNodal), node).is_zero());
  const std::vector<FieldElement> px{q(Q, 1), q(Q, 0), q(Q, 0)};
  CHECK(evaluate(P("2*x*z + 3*y^2"), px).is_zero());
  const std::vector<FieldElement> five{q(Q, 5)};
  CHECK_THROWS_AS(evaluate(P("x"), five), Error);
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2*y"), P("x*y^2")) == P("x*y"));
  CHECK(gcd(P("2*x*z + 3*y^2"), P("y*z")) == P("1"));
  CHECK(gcd(P("2*x + 4*y"), P("0")) == P("x + 2*y"));
  CHECK(gcd(P("0"), P("0")).is_zero());
  CHECK(gcd(P("(x - y)*(x + z)^2"), P("(x + z)*(y - 3*z)")) == P("x + z"));
}

TEST_CASE("gcd of 2xz + 3y^2 and yz by trial division") {
  // yz has the irreducible factors y and z; neither divides 2xz + 3y^2.
  const Polynomial f = P("2*x*z + 3*y^2");
  CHECK_FALSE(divide_exact(f, P("y")).has_value());
  CHECK_FALSE(divide_exact(f, P("z")).has_value());
  CHECK(divide_exact(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  CHECK_THROWS_AS(divide_exact(f, P("0")), Error);
}

TEST_CASE("substitute and primitive parts") {
  const std::vector<Polynomial> images{P("y"), P("x"), P("x + z")};
  CHECK(substitute(P("x*z"), images) == P("x*y + y*z"));
  CHECK(primitive_integral(P("1/2*x - 1/3*y")) == P("3*x - 2*y"));
  CHECK(primitive_integral(P("-4*x + 6")) == P("2*x - 3"));
}

TEST_CASE("roots in the base field") {
  const Ring t(Field::rationals(), "t");
  const auto r = roots_in_base_field(P("(t - 1)*(2*t + 3)*(t^2 + 1)", t));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == q(Field::rationals(), -3, 2));
  CHECK(r[1] == q(Field::rationals(), 1));
  const Ring tp(Field::prime(5), "t");
  CHECK(roots_in_base_field(P("t^2 + 1", tp)).size() == 2);  // 2, 3 mod 5
  CHECK_THROWS_AS(roots_in_base_field(P("0", t)), Error);
  CHECK(factor_integer(mpz_class(360)) == std::vector<mpz_class>{2, 2, 2, 3, 3, 5});
}

TEST_CASE("parser") {
  CHECK(P("y^2*z - x^3 - x^2*z") == P(kNodal));
  CHECK(P(" - x +  y ") == P("y - x"));
  CHECK(P("(x - z)^3") == P("x^3 - 3*x^2*z + 3*x*z^2 - z^3"));
  try {
    P("x + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("2x"), ParseError);
  CHECK_THROWS_AS(P("w + 1"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("(x + y"), ParseError);
  CHECK_THROWS_AS(P("1/0"), Error);
}

}  // TEST_SUITE
