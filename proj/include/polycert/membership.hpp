#ifndef POLYCERT_MEMBERSHIP_HPP
#define POLYCERT_MEMBERSHIP_HPP

#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

/// A semiring of polynomials generated by nonnegative scalars and a finite
/// list of nonconstant generators.
struct SemiringPresentation {
  std::vector<Polynomial> generators;
  bool include_nonneg_scalars = true;  // always the case here

  explicit SemiringPresentation(std::vector<Polynomial> gens);
};

/// One product of generator powers, keyed by its exponent tuple over the
/// generator list.
struct ProductEntry {
  std::vector<long> multidegree;
  Polynomial value;
};

/// All products of generators with total polynomial degree at most D,
/// including the empty product 1, deduplicated by value (the
/// lexicographically first multidegree is kept).
std::vector<ProductEntry> products_up_to_degree(const SemiringPresentation& t,
                                                long degree_bound);

struct WitnessTerm {
  Rational coefficient;  // > 0
  std::vector<long> multidegree;
};

/// Outcome of the degree-D membership LP. An infeasible answer refutes only
/// representations built from products of degree at most D.
struct MembershipResult {
  bool member = false;
  std::vector<WitnessTerm> witness;  // on member: target = sum c * prod g^e
  long degree = 0;                   // the bound D used
};

/// Exact LP feasibility for target = sum c_P * P, c_P >= 0, over the
/// products of degree at most D; any witness is re-verified by expansion.
MembershipResult member_at_degree(const Polynomial& target,
                                  const SemiringPresentation& t,
                                  long degree_bound);

/// Re-expands a witness and compares with the target exactly.
bool verify_membership_witness(const Polynomial& target,
                               const SemiringPresentation& t,
                               const std::vector<WitnessTerm>& witness);

}  // namespace polycert

#endif  // POLYCERT_MEMBERSHIP_HPP
