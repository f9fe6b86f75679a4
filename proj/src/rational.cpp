#include "polycert/rational.hpp"

#include <cctype>

#include "polycert/error.hpp"

namespace polycert {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto read_integer = [&](const char* what) {
    std::string digits;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') digits += '-';
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i];
      ++i;
    }
    if (i == start) throw_parse(std::string("expected digits in ") + what);
    return digits;
  };

  std::string num = read_integer("rational numerator");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_integer("rational denominator");
  }
  if (i != text.size()) throw_parse("trailing characters in rational");

  mpz_class n(num), d(den);
  if (d == 0) throw_parse("zero denominator in rational");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();  // tolerate non-canonical input
  return r;
}

}  // namespace polycert
