#ifndef POLYCERT_POLYNOMIAL_HPP
#define POLYCERT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycert/rational.hpp"

namespace polycert {

/// Exponent tuple of a monomial; length equals the ambient variable count,
/// entries are nonnegative.
using Exponents = std::vector<long>;

long total_degree(const Exponents& e);

/// Graded lexicographic, highest term first. Used as the map order so that
/// iteration yields the canonical printing order.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over exact rationals. Immutable value type:
/// every operation returns a fresh polynomial, never mutates its inputs, and
/// is safe to share across threads. No zero coefficients are ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, TermOrder>;

  /// The zero polynomial in nvars variables.
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(int nvars, Exponents e, const Rational& c);
  /// X1 + ... + Xn.
  static Polynomial variable_sum(int nvars);
  /// X1 + ... + Xn - 1, the relation cutting out the affine simplex ring.
  static Polynomial simplex_relation(int nvars);

  /// Parses the text grammar: terms joined by +/-, term = [rational][*]
  /// monomial, monomial = product of x<i>[^e] with 1-based indices.
  /// With nvars <= 0 the variable count is inferred as the largest index
  /// mentioned (at least 1).
  static Polynomial parse(std::string_view text, int nvars = 0);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; nullopt for the zero polynomial.
  std::optional<long> degree() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Exponents& e) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;

  /// k-th power by iterated multiplication, so callers scanning coefficient
  /// signs of consecutive powers pay one multiplication per step.
  Polynomial pow(unsigned long k) const;

  /// Exact value at a point; x must have nvars entries.
  Rational evaluate(const std::vector<Rational>& x) const;

  /// Splits into homogeneous components, ascending degree; the zero
  /// polynomial yields an empty list.
  std::vector<std::pair<long, Polynomial>> graded_parts() const;

  /// Multiplies each homogeneous component p_k by (X1+...+Xn)^(d-k). The
  /// result is homogeneous of degree d (or zero) and congruent to this
  /// polynomial modulo (X1+...+Xn-1). Requires d >= degree().
  Polynomial homogenize_pad(long d) const;

  bool is_homogeneous() const;

  struct NonnegCheck {
    bool nonneg;
    std::optional<Exponents> witness;  // some exponent with coeff < 0
  };
  /// Membership in P+, with a witness exponent on failure.
  NonnegCheck nonneg_coefficients() const;

  /// Re-embeds into a ring with more variables (new ones unused).
  Polynomial extended(int new_nvars) const;

  /// Canonical graded-lex print; parse(str(), nvars()) round-trips exactly.
  std::string str() const;

 private:
  void insert_term(Exponents e, Rational c);  // adds, drops zeros
  int nvars_;
  TermMap terms_;
};

}  // namespace polycert

#endif  // POLYCERT_POLYNOMIAL_HPP
