#include <doctest.h>

#include "polycert/error.hpp"
#include "polycert/polya.hpp"
#include "testutil.hpp"

using namespace polycert;
using testutil::P;
using testutil::PolyGen;
using testutil::Q;

TEST_CASE("polya_exponent finds the minimal refinement exponent") {
  auto res = polya_exponent(P("x1^2 - x1*x2 + x2^2"), 200);
  REQUIRE(res.found);
  CHECK(res.k == 1);
  CHECK(res.product == P("x1^3 + x2^3"));
  REQUIRE(res.witnesses.size() == 1);
  CHECK(res.witnesses[0].first == 0);
  CHECK(res.witnesses[0].second == Exponents{1, 1});

  auto immediate = polya_exponent(P("x1 + x2"), 200);
  REQUIRE(immediate.found);
  CHECK(immediate.k == 0);
}

TEST_CASE("polya_exponent exhausts on a simplex zero") {
  auto res = polya_exponent(P("x1^2 - 2*x1*x2 + x2^2"), 10);
  CHECK_FALSE(res.found);
  CHECK(res.max_k == 10);
  REQUIRE(res.witnesses.size() == 11);
  for (long k = 0; k <= 10; ++k) CHECK(res.witnesses[k].first == k);
}

TEST_CASE("polya_exponent preconditions") {
  CHECK_THROWS_AS(polya_exponent(P("1 + x1"), 5), Error);
  CHECK_THROWS_AS(polya_exponent(Polynomial(2), 5), Error);
}

TEST_CASE("falling factorial") {
  PolyGen gen(1515);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = Rational(gen.pick(-5, 5)) / Rational(gen.pick(1, 4));
    unsigned long m = static_cast<unsigned long>(gen.pick(0, 5));
    CHECK(falling_factorial(a, 0, m) == rational_pow(a, m));
    CHECK(falling_factorial(a, Q("7/3"), 0) == 1);
  }
  CHECK(falling_factorial(1, Q("1/3"), 2) == Q("2/3"));
}

TEST_CASE("f_epsilon") {
  Polynomial f = P("x1^2 - x1*x2 + x2^2");
  CHECK(f_epsilon(f, Q("1/3")) ==
        P("x1^2 + x2^2 - x1*x2 - 1/3*x1 - 1/3*x2"));
  CHECK(f_epsilon(f, 0) == f);
  CHECK(f_epsilon(P("x1*x2"), 1) == P("x1*x2"));
  CHECK_THROWS_AS(f_epsilon(P("1 + x1"), 1), Error);
}

TEST_CASE("coefficient identity on pinned cases") {
  CHECK(coefficient_identity_check(P("x1^2 - x1*x2 + x2^2"), 1));
  CHECK(coefficient_identity_check(P("x1 + x2"), 0));
  // degree-zero input needs at least one refinement step
  CHECK_THROWS_AS(coefficient_identity_check(P("3", 2), 0), Error);
  CHECK(coefficient_identity_check(P("3", 2), 1));
}

TEST_CASE("coefficient identity on random homogeneous polynomials") {
  PolyGen gen(1616);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    long d = gen.pick(1, 4);
    Polynomial f = gen.random_homogeneous(n, d, 5);
    for (long k = 0; k <= 4; ++k) CHECK(coefficient_identity_check(f, k));
  }
}

TEST_CASE("found results re-verify independently") {
  PolyGen gen(1717);
  for (int trial = 0; trial < 10; ++trial) {
    long d = gen.pick(1, 3);
    Polynomial f = gen.random_homogeneous(2, d, 4);
    auto res = polya_exponent(f, 30);
    if (!res.found) continue;
    Polynomial s = Polynomial::variable_sum(2);
    CHECK(res.product == s.pow(static_cast<unsigned long>(res.k)) * f);
    CHECK(res.product.nonneg_coefficients().nonneg);
    if (res.k > 0) {
      CHECK_FALSE((s.pow(static_cast<unsigned long>(res.k - 1)) * f)
                      .nonneg_coefficients()
                      .nonneg);
    }
    // coefficient-nonnegativity is preserved by one more refinement step
    CHECK((res.product * s).nonneg_coefficients().nonneg);
  }
}

TEST_CASE("simplex_positive") {
  CHECK(simplex_positive(P("x1^3 + x2^3"), 10) == 0);
  CHECK(simplex_positive(P("x1^2 - x1*x2 + x2^2"), 10) == 1);
  CHECK_FALSE(simplex_positive(P("x1*x2 - x1^2"), 5).has_value());
}
