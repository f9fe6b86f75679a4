#ifndef POLYCERT_VALUATION_HPP
#define POLYCERT_VALUATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polycert/polynomial.hpp"
#include "polycert/support.hpp"

namespace polycert {

/// Rational weight vector defining the monomial valuation v_w and the
/// initial part in_w. Length must match the polynomial's nvars.
using WeightVector = std::vector<Rational>;

/// Value of a monomial valuation; infinite exactly for the zero polynomial.
struct ValuationValue {
  bool infinite;
  Rational value;  // meaningful only when !infinite

  bool operator==(const ValuationValue& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

/// v_w(p) = -max{<w, a> : a in Log(p)}; infinity for p = 0.
ValuationValue valuation(const Polynomial& p, const WeightVector& w);

/// Sum of the terms of p whose exponent maximizes <w, a>; 0 for p = 0.
Polynomial initial_part(const Polynomial& p, const WeightVector& w);

/// Formal quotient of polynomials; no reduction, equality by
/// cross-multiplication.
struct Fraction {
  Polynomial num;
  Polynomial den;

  Fraction(Polynomial n, Polynomial d);
};

bool fraction_equal(const Fraction& a, const Fraction& b);

/// The place associated with v_w, evaluated on a fraction. Zero when the
/// numerator valuation is strictly larger, a fraction of initial parts when
/// they agree, and undefined when the fraction lies outside the valuation
/// ring (an informative result, not an error).
struct PlaceResult {
  enum class Kind { kZero, kFinite, kUndefined };
  Kind kind;
  std::optional<Fraction> value;  // set when kind == kFinite
};

PlaceResult place(const Fraction& a, const WeightVector& w);

/// For each proper face of the Newton polytope, the initial part cut out by
/// its supporting normal. Exhausts the initial parts different from p itself.
std::vector<std::pair<FaceData, Polynomial>> proper_initial_parts(
    const Polynomial& p);

struct AddassResult {
  bool ok;
  std::optional<FaceData> failing_face;
  std::optional<Polynomial> failing_part;
};

/// True iff every proper initial part has only nonnegative coefficients.
AddassResult check_addass(const Polynomial& p);

/// One row of the scaling-substitution table: substituting
/// Xi -> s^(-w_i) * x_i and clearing s^(v_w(p)) grades p by s-exponent;
/// the exponent-0 row equals in_w(p)(x) and all other rows carry strictly
/// positive s-exponents. Integer weights only.
struct LimitRow {
  long s_exponent;
  Rational value;
};

std::vector<LimitRow> limit_check(const Polynomial& p,
                                  const std::vector<long>& w,
                                  const std::vector<Rational>& x);

}  // namespace polycert

#endif  // POLYCERT_VALUATION_HPP
