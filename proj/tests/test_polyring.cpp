#include <doctest.h>

#include "polycert/error.hpp"
#include "polycert/polynomial.hpp"
#include "testutil.hpp"

using namespace polycert;
using testutil::P;
using testutil::PolyGen;
using testutil::Q;

TEST_CASE("addition") {
  CHECK(P("1 + x1") + P("1 - x1") == P("2"));
  CHECK(P("x1^2") + Polynomial(1) == P("x1^2"));
  CHECK(P("x1^2 - x1*x2") + P("x1*x2 + x2^2") == P("x1^2 + x2^2", 2));
}

TEST_CASE("multiplication") {
  CHECK(P("1 + x1") * P("1 - x1") == P("1 - x1^2"));
  CHECK(P("x1 + x2") * P("x1^2 - x1*x2 + x2^2") == P("x1^3 + x2^3"));
  Polynomial p = P("3/2*x1^2 - x2 + 7", 2);
  CHECK(p * Polynomial::constant(2, 1) == p);
}

TEST_CASE("powers by iterated multiplication") {
  CHECK(P("x1 + x2").pow(2) == P("x1^2 + 2*x1*x2 + x2^2"));
  CHECK(P("1 - x1 + x1^2").pow(2) == P("1 - 2*x1 + 3*x1^2 - 2*x1^3 + x1^4"));
  CHECK(P("5*x1 - x2^3").pow(0) == Polynomial::constant(2, 1));
}

TEST_CASE("evaluation") {
  CHECK(P("x1^2 - x1*x2 + x2^2").evaluate({Q("1"), Q("1")}) == Q("1"));
  CHECK(P("x1^4 + x2^4 + 1 - x1*x2").evaluate({Q("1"), Q("1")}) == Q("2"));
  CHECK(Polynomial(3).evaluate({Q("2"), Q("-7"), Q("1/3")}) == 0);
  CHECK_THROWS_AS(P("x1").evaluate({Q("1"), Q("1")}), Error);
}

TEST_CASE("graded parts") {
  auto parts = P("1 + x1", 2).graded_parts();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second == P("1", 2));
  CHECK(parts[1].first == 1);
  CHECK(parts[1].second == P("x1", 2));

  auto homog = P("x1^3 + x2^3").graded_parts();
  REQUIRE(homog.size() == 1);
  CHECK(homog[0].first == 3);

  CHECK(Polynomial(2).graded_parts().empty());
}

TEST_CASE("homogenize_pad") {
  CHECK(P("1 + x1", 2).homogenize_pad(2) ==
        P("2*x1^2 + 3*x1*x2 + x2^2"));
  CHECK(P("x1^3 + x2^3").homogenize_pad(3) == P("x1^3 + x2^3"));
  CHECK(P("1", 2).homogenize_pad(1) == P("x1 + x2"));
  CHECK_THROWS_AS(P("x1^2", 2).homogenize_pad(1), Error);
}

TEST_CASE("homogenize_pad agrees on the simplex") {
  PolyGen gen(101);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    Polynomial p = gen.random_poly(n, 4, 5);
    long d = *p.degree() + gen.pick(0, 2);
    Polynomial padded = p.homogenize_pad(d);
    auto x = gen.simplex_point(n);
    CHECK(padded.evaluate(x) == p.evaluate(x));
  }
}

TEST_CASE("nonnegative coefficient scan") {
  CHECK(P("x1^3 + x2^3").nonneg_coefficients().nonneg);
  auto res = P("1 - x1 + x1^2").nonneg_coefficients();
  CHECK_FALSE(res.nonneg);
  CHECK(*res.witness == Exponents{1});
  CHECK(Polynomial(1).nonneg_coefficients().nonneg);
}

TEST_CASE("text grammar parses and prints canonically") {
  CHECK(P("x1^2 - x1*x2 + x2^2").str() == "x1^2 - x1*x2 + x2^2");
  CHECK(P("  x1 ^ 2-x1 *x2+x2^2 ").str() == "x1^2 - x1*x2 + x2^2");
  CHECK(P("x1^4 + x2^4 + 1 - x1*x2").str() == "x1^4 + x2^4 - x1*x2 + 1");
  CHECK(P("3x1").str() == "3*x1");
  CHECK(P("0").is_zero());
  CHECK(Polynomial(2).str() == "0");
  CHECK(P("-x1 + 1").str() == "-x1 + 1");
  CHECK(P("1/2 * x1 + 1/2*x1").str() == "x1");
  CHECK(P("x1*x1").str() == "x1^2");
  CHECK(P("2/4").str() == "1/2");

  CHECK_THROWS_AS(P(""), Error);
  CHECK_THROWS_AS(P("x0"), Error);
  CHECK_THROWS_AS(P("1/0"), Error);
  CHECK_THROWS_AS(P("x1 +"), Error);
  CHECK_THROWS_AS(P("x1 x2 @"), Error);
  CHECK_THROWS_AS(P("x3", 2), Error);
}

TEST_CASE("print-parse round trip") {
  PolyGen gen(202);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(gen.pick(1, 4));
    Polynomial p = gen.random_poly(n, 6, 8);
    CHECK(Polynomial::parse(p.str(), n) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  PolyGen gen(303);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    Polynomial a = gen.random_poly(n, 3, 4);
    Polynomial b = gen.random_poly(n, 3, 4);
    Polynomial c = gen.random_poly(n, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(n));
  }
}

TEST_CASE("pow equals repeated multiplication") {
  PolyGen gen(404);
  for (int trial = 0; trial < 10; ++trial) {
    int n = static_cast<int>(gen.pick(1, 2));
    Polynomial p = gen.random_poly(n, 2, 3);
    Polynomial acc = Polynomial::constant(n, 1);
    for (unsigned long k = 0; k <= 8; ++k) {
      CHECK(p.pow(k) == acc);
      acc = acc * p;
    }
  }
}

TEST_CASE("evaluation is multiplicative") {
  PolyGen gen(505);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    Polynomial a = gen.random_poly(n, 3, 4);
    Polynomial b = gen.random_poly(n, 3, 4);
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i)
      x.push_back(Rational(gen.pick(-4, 4)) / Rational(gen.pick(1, 3)));
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(P("x1") + P("x1 + x2"), Error);
  CHECK_THROWS_AS(P("x1") * P("x2"), Error);
}

TEST_CASE("degree sentinel for zero") {
  CHECK_FALSE(Polynomial(2).degree().has_value());
  CHECK(*P("x1^4 + 1").degree() == 4);
}
