#ifndef POLYCERT_POWERS_HPP
#define POLYCERT_POWERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycert/polynomial.hpp"
#include "polycert/valuation.hpp"

namespace polycert {

/// Shifted numerical semigroup {a*l1 + b*l2 : a, b >= k} for coprime l1, l2.
struct SemigroupParams {
  long l1;
  long l2;
  long k;

  SemigroupParams(long l1_, long l2_, long k_);
};

/// Least m such that every integer >= m lies in the semigroup. Exhaustive
/// enumeration up to the explicit bound (l2-1)(-s1)l1 + k*l1 + k*l2 coming
/// from a Bezout relation 1 = s1*l1 + s2*l2 with s1 < 0.
long frobenius_conductor(const SemigroupParams& p);

/// Membership with witness: a, b >= k and a*l1 + b*l2 = m, if any.
std::optional<std::pair<long, long>> semigroup_member(long m,
                                                      const SemigroupParams& p);

/// Sign scan of f^k with a negative-coefficient witness on failure.
Polynomial::NonnegCheck power_nonneg(const Polynomial& f, unsigned long k);

/// Witness of a coefficient that stays negative in every power f^k: a vertex
/// v with positive coefficient and a negative-coefficient exponent beta such
/// that (k-1)v + beta decomposes over Log(f) only as (k-1) copies of v plus
/// beta (certified by a weight vector making beta the unique closest support
/// point to v), or a vertex with negative coefficient (odd powers keep it).
struct DefiniteNegative {
  Exponents vertex;
  Exponents beta;  // equal to vertex in the negative-vertex pattern
  std::vector<Rational> weight;  // certifies the decomposition uniqueness
  std::string note;
};

/// Exact inequality re-check of a definite-negative witness against f.
bool verify_definite_negative(const Polynomial& f, const DefiniteNegative& dn);

/// Diagnostic bundle for the power-stabilization hypotheses.
struct HypothesesReport {
  Rational value_at_ones;
  bool sign_ok = false;                    // value_at_ones > 0
  std::optional<long> first_nonneg_power;  // smallest k <= probe with f^k in P+
  long probe_powers = 0;
  AddassResult addass;
  std::optional<DefiniteNegative> definite_negative;
};

HypothesesReport check_hypotheses(const Polynomial& f, long probe_powers);

struct PowerCheckRow {
  long k;
  bool nonneg;
  std::optional<Exponents> witness;  // negative-coefficient exponent
};

/// Decision for "f^k has only nonnegative coefficients for all large k".
/// On stabilization, k0 is minimal, powers k0..conductor are verified one by
/// one, and everything beyond the conductor is sealed: it is a product of
/// the two verified coprime powers, and products of coefficient-nonnegative
/// polynomials are coefficient-nonnegative.
struct StabilizationReport {
  enum class Outcome { kStabilized, kNoPowerFound, kRejected };
  Outcome outcome;

  // stabilized
  long k0 = 0;
  std::pair<long, long> pair{0, 0};  // consecutive coprime exponents
  long conductor = 0;
  std::vector<PowerCheckRow> checked;          // k = 1..conductor
  std::optional<PowerCheckRow> minimality;     // row k0-1 when k0 > 1

  // no_power_found
  long max_power = 0;
  std::vector<PowerCheckRow> witnesses;  // one per k, all with witness set

  // rejected
  std::string reason;
};

/// Scans k = 1..max_power for the first consecutive coefficient-nonnegative
/// pair, seals with the Frobenius conductor of (l, l+1, 1), and reports the
/// minimal stabilization exponent. Rejected when f(1,...,1) <= 0.
StabilizationReport stabilize(const Polynomial& f, long max_power);

/// l odd and f^l in P+ force f(1,...,1) > 0; delegates to stabilize. The
/// zero polynomial stabilizes trivially.
StabilizationReport odd_power_corollary(const Polynomial& f, long l,
                                        long max_power);

}  // namespace polycert

#endif  // POLYCERT_POWERS_HPP
