#ifndef POLYCERT_POLYA_HPP
#define POLYCERT_POLYA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

/// Result of the refinement search for the least k with
/// (X1+...+Xn)^k * f coefficient-nonnegative.
struct PolyaResult {
  bool found = false;
  long k = 0;            // on found: minimal exponent
  Polynomial product;    // on found: (X1+...+Xn)^k * f, in P+
  long max_k = 0;        // on exhausted: the budget
  // one negative-coefficient witness per attempted k (all k on exhaustion,
  // the failed k < k_found otherwise)
  std::vector<std::pair<long, Exponents>> witnesses;

  explicit PolyaResult(int nvars) : product(nvars) {}
};

/// Searches k = 0..max_k, reusing the previous product (one multiplication
/// per step). Requires f homogeneous and nonzero. Termination within the
/// budget is guaranteed only when f > 0 on the standard simplex; otherwise
/// this is a semidecision and exhaustion carries no claim.
PolyaResult polya_exponent(const Polynomial& f, long max_k);

/// The generalized falling factorial prod_{i=0}^{m-1}(a - i*b); the empty
/// product is 1, and b = 0 gives a^m.
Rational falling_factorial(const Rational& a, const Rational& b,
                           unsigned long m);

/// Termwise falling-factorial deformation of a homogeneous f: each monomial
/// X^b becomes prod_i (X_i)(X_i - eps)...(X_i - (b_i-1)eps). At eps = 0 it
/// is f itself.
Polynomial f_epsilon(const Polynomial& f, const Rational& eps);

/// Exact identity between the two coefficient routes: for every |a| = k+d,
/// the coefficient of X^a in (X1+...+Xn)^k * f must equal
/// k!(k+d)^d / (a_1! ... a_n!) * f_{1/(k+d)}(a/(k+d)). Requires f
/// homogeneous, nonzero, and k+d >= 1.
bool coefficient_identity_check(const Polynomial& f, long k);

/// One-sided positivity test on the simplex: a returned k certifies that f
/// is nonnegative on the standard simplex (and positive wherever a monomial
/// survives); nullopt carries no claim.
std::optional<long> simplex_positive(const Polynomial& f, long max_k);

}  // namespace polycert

#endif  // POLYCERT_POLYA_HPP
