#ifndef POLYCERT_SIMPLEXCERT_HPP
#define POLYCERT_SIMPLEXCERT_HPP

#include <utility>
#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

/// An identity f = sum g_i * h_i with every h_i nonzero and
/// coefficient-nonnegative. The g_i are unconstrained.
struct IdentityData {
  std::vector<std::pair<Polynomial, Polynomial>> pairs;  // (g, h)

  explicit IdentityData(std::vector<std::pair<Polynomial, Polynomial>> p);
};

/// Exact witness that f is congruent to a coefficient-nonnegative polynomial
/// modulo (X1+...+Xn-1): f = P + Q*(X1+...+Xn-1) with P in P+. k is the
/// refinement exponent used and shift the multiple of (X1+...+Xn-1)^2 added
/// to each g_i.
struct SimplexCertificate {
  Polynomial P;
  Polynomial Q;
  long k = 0;
  long shift = 0;
};

/// f == sum g_i h_i exactly and every h_i in P+.
bool verify_identity(const Polynomial& f, const IdentityData& id);

struct CertifyResult {
  bool found = false;
  SimplexCertificate cert;   // on found
  long max_shift = 0;        // echoed budgets
  long max_k = 0;

  explicit CertifyResult(int nvars) : cert{Polynomial(nvars), Polynomial(nvars)} {}
};

/// Certificate search: for each shift c in {0, 1, 2, 4, ...} up to
/// max_shift, set g_i' = g_i + c*(X1+...+Xn-1)^2, assemble f' = sum g_i' h_i
/// (always congruent to f), homogenize all pairs to a common degree, and run
/// the refinement search on the homogeneous sum. On success P is the
/// refined product and Q the exact quotient of f - P by (X1+...+Xn-1).
CertifyResult certify_simplex(const Polynomial& f, const IdentityData& id,
                              long max_shift, long max_k);

/// Wrapper using the trivial identity f = f * 1.
CertifyResult certify_positive_simplex(const Polynomial& f, long max_shift,
                                       long max_k);

/// Recomputes f - P, divides exactly by (X1+...+Xn-1), compares with Q and
/// checks P in P+. Pure re-check, no search.
bool verify_certificate(const Polynomial& f, const SimplexCertificate& cert);

/// Exact division by (X1+...+Xn-1): returns (quotient, remainder) with
/// p = quotient*(X1+...+Xn-1) + remainder and the remainder free of Xn.
std::pair<Polynomial, Polynomial> divmod_simplex_relation(const Polynomial& p);

/// Deterministic reconstruction of the homogeneous search input from the
/// identity and a shift value; exposed so that verification can rebuild the
/// certificate without re-running any search.
Polynomial assemble_homogeneous(const IdentityData& id, long shift);

/// The shift values certify_simplex tries, in order: 0, 1, 2, 4, ... up to
/// max_shift.
std::vector<long> certify_shift_schedule(long max_shift);

}  // namespace polycert

#endif  // POLYCERT_SIMPLEXCERT_HPP
