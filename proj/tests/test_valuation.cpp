#include <doctest.h>

#include <set>
#include <string>

#include "polycert/error.hpp"
#include "polycert/valuation.hpp"
#include "testutil.hpp"

using namespace polycert;
using testutil::P;
using testutil::PolyGen;
using testutil::Q;

namespace {

WeightVector W(std::vector<long> w) {
  WeightVector out;
  for (long v : w) out.push_back(Rational(v));
  return out;
}

std::set<std::string> part_strings(const Polynomial& p) {
  std::set<std::string> out;
  for (const auto& [face, part] : proper_initial_parts(p)) out.insert(part.str());
  return out;
}

}  // namespace

TEST_CASE("valuation") {
  Polynomial p = P("x1^4 + x2^4 + 1 - x1*x2");
  CHECK(valuation(p, W({1, 0})) == ValuationValue{false, Rational(-4)});
  CHECK(valuation(p, W({-1, -1})) == ValuationValue{false, Rational(0)});
  CHECK(valuation(Polynomial(2), W({1, 1})).infinite);
  CHECK_THROWS_AS(valuation(p, W({1})), Error);
}

TEST_CASE("initial_part") {
  Polynomial p = P("x1^4 + x2^4 + 1 - x1*x2");
  CHECK(initial_part(p, W({1, 0})) == P("x1^4", 2));
  CHECK(initial_part(p, W({1, 1})) == P("x1^4 + x2^4"));
  Polynomial homog = P("x1^3 + x2^3");
  CHECK(initial_part(homog, W({1, 1})) == homog);
}

TEST_CASE("place") {
  WeightVector w = W({1, 1});
  Fraction a(P("x1*x2"), P("x1^4 + x2^4 + 1"));
  CHECK(place(a, w).kind == PlaceResult::Kind::kZero);

  Polynomial p = P("x1^2 - x1*x2 + 7");
  Fraction same(p, p);
  auto r = place(same, w);
  REQUIRE(r.kind == PlaceResult::Kind::kFinite);
  CHECK(fraction_equal(*r.value,
                       Fraction(Polynomial::constant(2, 1), Polynomial::constant(2, 1))));

  Fraction outside(P("x1^4", 2), P("x1*x2"));
  CHECK(place(outside, w).kind == PlaceResult::Kind::kUndefined);

  Fraction null(Polynomial(2), P("x1 + x2"));
  CHECK(place(null, w).kind == PlaceResult::Kind::kZero);

  CHECK_THROWS_AS(Fraction(P("x1"), Polynomial(1)), Error);
}

TEST_CASE("proper initial parts") {
  std::set<std::string> expect{"x1^4", "x2^4", "1", "x1^4 + x2^4",
                               "x1^4 + 1", "x2^4 + 1"};
  CHECK(part_strings(P("x1^4 + x2^4 + 1 - x1*x2")) == expect);
  CHECK(proper_initial_parts(P("3*x1^2")).empty());
  CHECK(part_strings(P("x1 + x2")) == std::set<std::string>{"x1", "x2"});
}

TEST_CASE("check_addass") {
  CHECK(check_addass(P("x1^4 + x2^4 + 1 - x1*x2")).ok);
  CHECK(check_addass(P("1 - x1 + x1^2")).ok);
  auto bad = check_addass(P("x1 - x1^2 + x2^2"));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failing_part.has_value());
  CHECK_FALSE(bad.failing_part->nonneg_coefficients().nonneg);
  CHECK(check_addass(P("5*x1*x2^2")).ok);
}

TEST_CASE("limit table") {
  Polynomial p = P("x1^4 + x2^4 + 1 - x1*x2");
  auto rows = limit_check(p, {1, 1}, {Q("1"), Q("1")});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].s_exponent == 0);
  CHECK(rows[0].value == Q("2"));  // in_w(p)(1,1)
  CHECK(rows[1].s_exponent == 2);
  CHECK(rows[1].value == Q("-1"));
  CHECK(rows[2].s_exponent == 4);
  CHECK(rows[2].value == Q("1"));

  auto mono = limit_check(P("5*x1^2*x2"), {3, -1}, {Q("2"), Q("1")});
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].s_exponent == 0);
  CHECK(mono[0].value == Q("20"));

  auto edge = limit_check(P("x1 + x2"), {1, 0}, {Q("1"), Q("1")});
  CHECK(edge[0].s_exponent == 0);
  CHECK(edge[0].value == Q("1"));
}

TEST_CASE("initial parts are multiplicative") {
  PolyGen gen(1212);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(gen.pick(1, 3));
    Polynomial p = gen.random_poly(n, 3, 4);
    Polynomial q = gen.random_poly(n, 3, 4);
    WeightVector w;
    for (int i = 0; i < n; ++i)
      w.push_back(Rational(gen.pick(-3, 3)) / Rational(gen.pick(1, 2)));
    CHECK(initial_part(p * q, w) == initial_part(p, w) * initial_part(q, w));
    // valuations add under products and obey the ultrametric bound
    ValuationValue vp = valuation(p, w), vq = valuation(q, w);
    ValuationValue vpq = valuation(p * q, w);
    CHECK(vpq == ValuationValue{false, vp.value + vq.value});
    ValuationValue vsum = valuation(p + q, w);
    if (!vsum.infinite)
      CHECK(vsum.value >= std::min(vp.value, vq.value));
  }
}

TEST_CASE("place is multiplicative where defined") {
  PolyGen gen(1313);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(gen.pick(1, 2));
    Fraction a(gen.random_poly(n, 3, 3), gen.random_poly(n, 3, 3));
    Fraction b(gen.random_poly(n, 3, 3), gen.random_poly(n, 3, 3));
    WeightVector w;
    for (int i = 0; i < n; ++i) w.push_back(Rational(gen.pick(-2, 2)));
    Fraction ab(a.num * b.num, a.den * b.den);
    auto ra = place(a, w), rb = place(b, w), rab = place(ab, w);
    if (ra.kind == PlaceResult::Kind::kUndefined ||
        rb.kind == PlaceResult::Kind::kUndefined ||
        rab.kind == PlaceResult::Kind::kUndefined)
      continue;
    if (ra.kind == PlaceResult::Kind::kZero || rb.kind == PlaceResult::Kind::kZero) {
      CHECK(rab.kind == PlaceResult::Kind::kZero);
    } else {
      REQUIRE(rab.kind == PlaceResult::Kind::kFinite);
      Fraction prod(ra.value->num * rb.value->num, ra.value->den * rb.value->den);
      CHECK(fraction_equal(*rab.value, prod));
    }
  }
}

TEST_CASE("initial parts of powers are powers of initial parts") {
  PolyGen gen(1414);
  for (int trial = 0; trial < 8; ++trial) {
    int n = static_cast<int>(gen.pick(1, 2));
    Polynomial p = gen.random_poly(n, 3, 4);
    for (unsigned long k : {2ul, 3ul}) {
      std::set<std::string> powered;
      for (const auto& [face, part] : proper_initial_parts(p))
        powered.insert(part.pow(k).str());
      CHECK(part_strings(p.pow(k)) == powered);
    }
  }
}
