#include <doctest.h>

#include "polycert/error.hpp"
#include "polycert/simplexcert.hpp"
#include "testutil.hpp"

using namespace polycert;
using testutil::P;
using testutil::PolyGen;

namespace {

IdentityData id_of(std::vector<std::pair<Polynomial, Polynomial>> pairs) {
  return IdentityData(std::move(pairs));
}

}  // namespace

TEST_CASE("verify_identity") {
  CHECK(verify_identity(P("x1^3 - x1^2*x2 + x1*x2^2"),
                        id_of({{P("x1^2 - x1*x2 + x2^2"), P("x1", 2)}})));
  Polynomial f = P("x1^4 - 7*x1 + 2/3", 2);
  CHECK(verify_identity(f, id_of({{f, Polynomial::constant(2, 1)}})));
  CHECK_FALSE(verify_identity(P("x1", 2), id_of({{Polynomial::constant(2, 1), P("x2", 2)}})));
}

TEST_CASE("identity construction enforces the h constraints") {
  CHECK_THROWS_AS(id_of({}), Error);
  CHECK_THROWS_AS(id_of({{P("x1"), Polynomial(1)}}), Error);
  CHECK_THROWS_AS(id_of({{P("x1"), P("1 - x1")}}), Error);
}

TEST_CASE("exact division by the simplex relation") {
  PolyGen gen(1818);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    Polynomial q = gen.random_poly(n, 3, 4);
    Polynomial d = Polynomial::simplex_relation(n);
    auto [quot, rem] = divmod_simplex_relation(q * d);
    CHECK(quot == q);
    CHECK(rem.is_zero());

    Polynomial p = gen.random_poly(n, 3, 4);
    auto [quot2, rem2] = divmod_simplex_relation(p);
    CHECK(quot2 * d + rem2 == p);
    // remainder is reduced: no occurrence of the last variable
    for (const auto& [e, c] : rem2.terms()) CHECK(e[n - 1] == 0);
  }
}

TEST_CASE("univariate division by x1 - 1") {
  auto [q, r] = divmod_simplex_relation(P("x1^2 - 1"));
  CHECK(q == P("x1 + 1"));
  CHECK(r.is_zero());
  auto [q2, r2] = divmod_simplex_relation(P("x1^3"));
  CHECK(q2 * P("x1 - 1") + r2 == P("x1^3"));
  CHECK(r2 == P("1"));
}

TEST_CASE("certificate for the worked identity") {
  Polynomial f = P("x1^3 - x1^2*x2 + x1*x2^2");
  auto res = certify_simplex(f, id_of({{P("x1^2 - x1*x2 + x2^2"), P("x1", 2)}}),
                             64, 200);
  REQUIRE(res.found);
  CHECK(res.cert.shift == 0);
  CHECK(res.cert.k == 1);
  CHECK(res.cert.P == P("x1^4 + x1*x2^3"));
  CHECK(res.cert.Q == -f);
  CHECK(verify_certificate(f, res.cert));
}

TEST_CASE("certificate via the trivial identity") {
  Polynomial f = P("x1^2 - x1*x2 + x2^2");
  auto res = certify_positive_simplex(f, 64, 200);
  REQUIRE(res.found);
  CHECK(res.cert.shift == 0);
  CHECK(res.cert.k == 1);
  CHECK(res.cert.P == P("x1^3 + x2^3"));
  CHECK(res.cert.Q == -f);
  CHECK(verify_certificate(f, res.cert));
}

TEST_CASE("constant certificates") {
  Polynomial two = Polynomial::constant(2, 2);
  auto res = certify_positive_simplex(two, 8, 50);
  REQUIRE(res.found);
  CHECK(res.cert.k == 0);
  CHECK(res.cert.P == two);
  CHECK(res.cert.Q.is_zero());
  CHECK(verify_certificate(two, res.cert));
}

TEST_CASE("negative constant exhausts every budget") {
  auto res = certify_positive_simplex(Polynomial::constant(2, -1), 8, 50);
  CHECK_FALSE(res.found);
}

TEST_CASE("interior zero exhausts every budget") {
  // 1 - 4*x1*x2 is congruent to (x1-x2)^2, which vanishes at (1/2, 1/2); a
  // coefficient-nonnegative polynomial vanishing at a strictly positive
  // point is zero, so no certificate can exist at any budget
  auto res = certify_positive_simplex(P("1 - 4*x1*x2"), 8, 50);
  CHECK_FALSE(res.found);
  CHECK(res.max_shift == 8);
  CHECK(res.max_k == 50);
}

TEST_CASE("tampered certificates are rejected") {
  Polynomial f = P("x1^2 - x1*x2 + x2^2");
  auto res = certify_positive_simplex(f, 64, 200);
  REQUIRE(res.found);
  SimplexCertificate bad = res.cert;
  bad.P = bad.P - P("2*x1^3", 2);  // negate one coefficient
  CHECK_FALSE(verify_certificate(f, bad));
  SimplexCertificate bad2 = res.cert;
  bad2.Q = bad2.Q + Polynomial::constant(2, 1);
  CHECK_FALSE(verify_certificate(f, bad2));
}

TEST_CASE("assembled polynomial agrees with f on the simplex") {
  PolyGen gen(1919);
  for (int trial = 0; trial < 15; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    Polynomial g = gen.random_poly(n, 2, 3);
    Polynomial h = gen.random_poly(n, 2, 3, /*nonneg=*/true);
    Polynomial f = g * h;
    IdentityData id = id_of({{g, h}});
    for (long shift : {0L, 1L, 2L}) {
      Polynomial homog = assemble_homogeneous(id, shift);
      auto x = gen.simplex_point(n);
      CHECK(homog.evaluate(x) == f.evaluate(x));
      if (!homog.is_zero()) CHECK(homog.is_homogeneous());
    }
  }
}

TEST_CASE("successful certificates imply simplex nonnegativity") {
  PolyGen gen(2020);
  for (int trial = 0; trial < 10; ++trial) {
    int n = static_cast<int>(gen.pick(2, 3));
    Polynomial f = gen.random_poly(n, 2, 3);
    auto res = certify_positive_simplex(f, 4, 25);
    if (!res.found) continue;
    CHECK(verify_certificate(f, res.cert));
    for (int probe = 0; probe < 5; ++probe) {
      auto x = gen.simplex_point(n);
      CHECK(f.evaluate(x) >= 0);
    }
  }
}
