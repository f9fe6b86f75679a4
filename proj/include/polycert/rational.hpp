#ifndef POLYCERT_RATIONAL_HPP
#define POLYCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polycert {

// Exact arbitrary-precision rational. mpq_class keeps values in lowest terms
// with a positive denominator; every constructor path below canonicalizes.
using Rational = mpq_class;

/// Parses "p" or "p/q" in base 10 (optional leading sign). Throws on anything
/// else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise. Inverse of
/// parse_rational on its own output.
std::string rational_str(const Rational& q);

/// q^e for integer e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

}  // namespace polycert

#endif  // POLYCERT_RATIONAL_HPP
