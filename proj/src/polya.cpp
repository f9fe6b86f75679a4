#include "polycert/polya.hpp"

#include <functional>

#include "polycert/error.hpp"

namespace polycert {

namespace {

void require_homogeneous(const Polynomial& f, const char* who) {
  if (f.is_zero())
    throw_precondition(std::string(who) + " requires a nonzero polynomial");
  if (!f.is_homogeneous())
    throw_precondition(std::string(who) + " requires a homogeneous polynomial");
}

// all exponent tuples of n nonnegative entries with given total
void compositions(long total, int n, Exponents& cur,
                  const std::function<void(const Exponents&)>& fn) {
  if (n == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (long v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, n - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

PolyaResult polya_exponent(const Polynomial& f, long max_k) {
  require_homogeneous(f, "polya_exponent");
  if (max_k < 0) throw_precondition("polya_exponent requires max_k >= 0");
  PolyaResult res(f.nvars());
  Polynomial s = Polynomial::variable_sum(f.nvars());
  Polynomial product = f;
  for (long k = 0; k <= max_k; ++k) {
    if (k > 0) product = product * s;
    auto check = product.nonneg_coefficients();
    if (check.nonneg) {
      res.found = true;
      res.k = k;
      res.product = product;
      return res;
    }
    res.witnesses.emplace_back(k, *check.witness);
  }
  res.found = false;
  res.max_k = max_k;
  return res;
}

Rational falling_factorial(const Rational& a, const Rational& b,
                           unsigned long m) {
  Rational prod(1);
  Rational factor = a;
  for (unsigned long i = 0; i < m; ++i) {
    prod *= factor;
    factor -= b;
  }
  return prod;
}

Polynomial f_epsilon(const Polynomial& f, const Rational& eps) {
  if (!f.is_homogeneous())
    throw_precondition("f_epsilon requires a homogeneous polynomial");
  const int n = f.nvars();
  Polynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      Exponents unit(n, 0);
      unit[i] = 1;
      Polynomial xi = Polynomial::monomial(n, unit, 1);
      for (long j = 0; j < e[i]; ++j)
        term = term * (xi - Polynomial::constant(n, eps * Rational(j)));
    }
    out = out + term;
  }
  return out;
}

bool coefficient_identity_check(const Polynomial& f, long k) {
  require_homogeneous(f, "coefficient_identity_check");
  if (k < 0) throw_precondition("coefficient_identity_check requires k >= 0");
  const long d = *f.degree();
  if (k + d < 1) throw_precondition("coefficient_identity_check requires k+d >= 1");
  const int n = f.nvars();

  Polynomial lhs = Polynomial::variable_sum(n).pow(static_cast<unsigned long>(k)) * f;

  const Rational kd(k + d);
  Polynomial deformed = f_epsilon(f, Rational(1) / kd);
  mpz_class k_fact;
  mpz_fac_ui(k_fact.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class kd_pow;
  mpz_ui_pow_ui(kd_pow.get_mpz_t(), static_cast<unsigned long>(k + d),
                static_cast<unsigned long>(d));

  bool ok = true;
  Exponents cur;
  std::function<void(const Exponents&)> probe = [&](const Exponents& alpha) {
    if (!ok) return;
    mpz_class denom = 1;
    std::vector<Rational> point(n);
    for (int i = 0; i < n; ++i) {
      mpz_class fac;
      mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(alpha[i]));
      denom *= fac;
      point[i] = Rational(alpha[i]) / kd;
    }
    Rational prefactor = Rational(k_fact * kd_pow) / Rational(denom);
    Rational rhs = prefactor * deformed.evaluate(point);
    if (lhs.coefficient(alpha) != rhs) ok = false;
  };
  compositions(k + d, n, cur, probe);
  return ok;
}

std::optional<long> simplex_positive(const Polynomial& f, long max_k) {
  PolyaResult res = polya_exponent(f, max_k);
  if (res.found) return res.k;
  return std::nullopt;
}

}  // namespace polycert
