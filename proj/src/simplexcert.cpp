#include "polycert/simplexcert.hpp"

#include <map>

#include "polycert/error.hpp"
#include "polycert/polya.hpp"

namespace polycert {

IdentityData::IdentityData(std::vector<std::pair<Polynomial, Polynomial>> p)
    : pairs(std::move(p)) {
  if (pairs.empty()) throw_precondition("identity needs at least one pair");
  const int n = pairs.front().first.nvars();
  for (const auto& [g, h] : pairs) {
    if (g.nvars() != n || h.nvars() != n)
      throw_dimension("identity pairs with mismatched nvars");
    if (h.is_zero()) throw_precondition("identity pair with h = 0");
    if (!h.nonneg_coefficients().nonneg)
      throw_precondition("identity pair with a negative coefficient in h");
  }
}

bool verify_identity(const Polynomial& f, const IdentityData& id) {
  if (f.nvars() != id.pairs.front().first.nvars())
    throw_dimension("identity nvars does not match f");
  Polynomial sum(f.nvars());
  for (const auto& [g, h] : id.pairs) {
    if (!h.nonneg_coefficients().nonneg) return false;
    sum = sum + g * h;
  }
  return sum == f;
}

std::pair<Polynomial, Polynomial> divmod_simplex_relation(const Polynomial& p) {
  const int n = p.nvars();
  // divide by Xn - E with E = 1 - X1 - ... - X_{n-1}, synthetic division on
  // the Xn-degree
  Polynomial e_part = Polynomial::constant(n, 1);
  for (int i = 0; i + 1 < n; ++i) {
    Exponents unit(n, 0);
    unit[i] = 1;
    e_part = e_part - Polynomial::monomial(n, unit, 1);
  }

  std::map<long, Polynomial> coeffs;  // Xn-degree -> coefficient polynomial
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    long j = rest[n - 1];
    rest[n - 1] = 0;
    auto it = coeffs.find(j);
    if (it == coeffs.end()) it = coeffs.emplace(j, Polynomial(n)).first;
    it->second = it->second + Polynomial::monomial(n, std::move(rest), c);
  }
  if (coeffs.empty()) return {Polynomial(n), Polynomial(n)};

  long top = coeffs.rbegin()->first;
  Polynomial quotient(n);
  Polynomial carry(n);  // b_{j+1}
  for (long j = top; j >= 0; --j) {
    Polynomial cj(n);
    auto it = coeffs.find(j);
    if (it != coeffs.end()) cj = it->second;
    Polynomial bj = cj + e_part * carry;
    if (j > 0) {
      Exponents xn(n, 0);
      xn[n - 1] = j - 1;
      quotient = quotient + bj * Polynomial::monomial(n, std::move(xn), 1);
      carry = bj;
    } else {
      return {quotient, bj};
    }
  }
  return {quotient, Polynomial(n)};
}

Polynomial assemble_homogeneous(const IdentityData& id, long shift) {
  const int n = id.pairs.front().first.nvars();
  Polynomial shift_term =
      Polynomial::simplex_relation(n).pow(2) * Rational(shift);

  long d = -1;
  std::vector<Polynomial> gs;
  gs.reserve(id.pairs.size());
  for (const auto& [g, h] : id.pairs) {
    Polynomial gp = g + shift_term;
    if (!gp.is_zero()) d = std::max(d, *gp.degree() + *h.degree());
    gs.push_back(std::move(gp));
  }
  Polynomial out(n);
  if (d < 0) return out;  // every g_i' vanished
  for (std::size_t i = 0; i < id.pairs.size(); ++i) {
    if (gs[i].is_zero()) continue;
    const Polynomial& h = id.pairs[i].second;
    Polynomial big_g = gs[i].homogenize_pad(d - *h.degree());
    Polynomial big_h = h.homogenize_pad(*h.degree());
    out = out + big_g * big_h;
  }
  return out;
}

std::vector<long> certify_shift_schedule(long max_shift) {
  std::vector<long> out{0};
  for (long c = 1; c <= max_shift; c *= 2) out.push_back(c);
  return out;
}

CertifyResult certify_simplex(const Polynomial& f, const IdentityData& id,
                              long max_shift, long max_k) {
  if (!verify_identity(f, id))
    throw_precondition("identity does not reproduce f exactly");
  CertifyResult res(f.nvars());
  res.max_shift = max_shift;
  res.max_k = max_k;
  const int n = f.nvars();
  const Polynomial relation = Polynomial::simplex_relation(n);

  for (long c : certify_shift_schedule(max_shift)) {
    // the assembled affine combination stays congruent to f
    Polynomial shifted_sum(n);
    Polynomial shift_term = relation.pow(2) * Rational(c);
    for (const auto& [g, h] : id.pairs) shifted_sum = shifted_sum + (g + shift_term) * h;
    if (!divmod_simplex_relation(shifted_sum - f).second.is_zero())
      throw_internal("shifted identity lost congruence with f");

    Polynomial homog = assemble_homogeneous(id, c);
    if (homog.is_zero()) {
      // f is congruent to 0; the zero certificate works
      auto [q, rem] = divmod_simplex_relation(f);
      if (!rem.is_zero()) throw_internal("zero assembly with nonzero remainder");
      res.found = true;
      res.cert = {Polynomial(n), std::move(q), 0, c};
      return res;
    }
    PolyaResult polya = polya_exponent(homog, max_k);
    if (!polya.found) continue;
    auto [q, rem] = divmod_simplex_relation(f - polya.product);
    if (!rem.is_zero())
      throw_internal("certificate division left a nonzero remainder");
    res.found = true;
    res.cert = {std::move(polya.product), std::move(q), polya.k, c};
    return res;
  }
  res.found = false;
  return res;
}

CertifyResult certify_positive_simplex(const Polynomial& f, long max_shift,
                                       long max_k) {
  IdentityData trivial({{f, Polynomial::constant(f.nvars(), 1)}});
  return certify_simplex(f, trivial, max_shift, max_k);
}

bool verify_certificate(const Polynomial& f, const SimplexCertificate& cert) {
  if (f.nvars() != cert.P.nvars() || f.nvars() != cert.Q.nvars()) return false;
  if (!cert.P.nonneg_coefficients().nonneg) return false;
  auto [q, rem] = divmod_simplex_relation(f - cert.P);
  return rem.is_zero() && q == cert.Q;
}

}  // namespace polycert
