#include <doctest.h>

#include "random_gen.hpp"
#include "skein/error.hpp"
#include "skein/sqrt_lambda.hpp"

using namespace skein;
using skein::testing::random_laurent;
using skein::testing::random_point;
using skein::testing::random_rational_fn;

namespace {

RationalFn P(const char* s) { return RationalFn::parse(s); }

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly q = LaurentPoly::q();
  CHECK((q - LaurentPoly(1L)) + LaurentPoly(1L) == q);
  CHECK((q - q).is_zero());
  CHECK(((q - 1L) * (q + 1L)).str() == "q^2 - 1");
  CHECK((q * q - q + 1L).str() == "q^2 - q + 1");
  CHECK((q * q - q + 1L).compact_str() == "q^2-q+1");
  CHECK(LaurentPoly::parse("q^-1*z + 1/2*q - 3").str() == "q^-1*z + 1/2*q - 3");
  CHECK(LaurentPoly::monomial(1, 1, -1).evaluate(2, 4) == Rational(1, 2));
}

TEST_CASE("rational functions reduce to lowest terms") {
  RationalFn a = P("(q^2 - 1)/(q - 1)");
  CHECK(a == P("q + 1"));
  CHECK(a.is_laurent());
  RationalFn b = P("(q*z - z)/(q^2*z - z)");
  CHECK(b == P("1/(q + 1)"));
  CHECK(P("(z^2 - q^2)/(z - q)") == P("z + q"));
  CHECK(P("(q^2*z^2 - 2*q*z + 1)/(q*z - 1)") == P("q*z - 1"));
  CHECK(P("1/(q - 1) + 1/(q + 1)") == P("2*q/(q^2 - 1)"));
  CHECK_THROWS_AS(P("1/(q - q)"), ParseError);
  CHECK_THROWS_AS(RationalFn(1L) / RationalFn(), DomainError);
}

TEST_CASE("lambda and Delta") {
  const RationalFn& l = lambda();
  CHECK(l.str() == "(z - q + 1)/(q*z)");
  CHECK(RationalFn::parse(l.str()) == l);
  CHECK(RationalFn(1L) - l * RationalFn(LaurentPoly::q()) == P("(q - 1)/z"));
  CHECK(l.evaluate(1, 1) == 1);
  // Delta = 1/(z*sqrt(lambda)) = sqrt(lambda)/(z*lambda).
  CHECK(delta().half_power() == 1);
  CHECK(delta().coeff() == RationalFn(1L) / (l * P("z")));
  SqrtLambdaScalar s = SqrtLambdaScalar::sqrt_lambda_pow(1);
  CHECK((s * s).half_power() == 0);
  CHECK((s * s).coeff() == l);
  CHECK((delta() * s * SqrtLambdaScalar(0, P("z"))) == SqrtLambdaScalar());
}

TEST_CASE("evaluation domain errors") {
  CHECK_THROWS_AS(LaurentPoly::q(-1).evaluate(0, 1), DomainError);
  CHECK_THROWS_AS(P("1/(q - 2)").evaluate(2, 1), DomainError);
  CHECK(P("q - q").evaluate(5, 7) == 0);
}

TEST_CASE("printing round-trips") {
  for (int i = 0; i < 300; ++i) {
    RationalFn f = random_rational_fn();
    CHECK(RationalFn::parse(f.str()) == f);
    CHECK(RationalFn::parse(f.compact_str()) == f);
  }
}

TEST_CASE("ring axioms on random inputs") {
  for (int i = 0; i < 500; ++i) {
    RationalFn a = random_rational_fn();
    RationalFn b = random_rational_fn();
    RationalFn c = random_rational_fn();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalFn());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int i = 0; i < 500; ++i) {
    RationalFn a = random_rational_fn();
    RationalFn b = random_rational_fn();
    Rational q0 = random_point();
    Rational z0 = random_point();
    try {
      Rational va = a.evaluate(q0, z0);
      Rational vb = b.evaluate(q0, z0);
      CHECK((a * b).evaluate(q0, z0) == va * vb);
      CHECK((a + b).evaluate(q0, z0) == va + vb);
    } catch (const DomainError&) {
      // a pole of an input; nothing to compare
    }
  }
}

TEST_CASE("polynomial gcd") {
  LaurentPoly a = LaurentPoly::parse("(q*z + 1)*(q - z)^2");
  LaurentPoly b = LaurentPoly::parse("(q*z + 1)*(q - z)*(z + 3)");
  CHECK(polynomial_gcd(a, b) == -LaurentPoly::parse("(q*z + 1)*(q - z)"));
  for (int i = 0; i < 200; ++i) {
    LaurentPoly g = random_laurent(3, 2, 3);
    LaurentPoly x = random_laurent(3, 2, 3);
    LaurentPoly y = random_laurent(3, 2, 3);
    if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
    LaurentPoly d = polynomial_gcd(g * x, g * y);
    CHECK(exact_quotient(g * x, d) * d == g * x);
    CHECK(exact_quotient(g, polynomial_gcd(g, d)).is_monomial() == true);
  }
}
