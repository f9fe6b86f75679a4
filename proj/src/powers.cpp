#include "polycert/powers.hpp"

#include <algorithm>
#include <numeric>

#include "polycert/error.hpp"
#include "polycert/lp.hpp"
#include "polycert/support.hpp"

namespace polycert {

SemigroupParams::SemigroupParams(long l1_, long l2_, long k_)
    : l1(l1_), l2(l2_), k(k_) {
  if (l1 < 1 || l2 < 1) throw_precondition("semigroup generators must be positive");
  if (k < 0) throw_precondition("semigroup offset must be nonnegative");
  if (std::gcd(l1, l2) != 1)
    throw_precondition("semigroup generators must be coprime");
}

std::optional<std::pair<long, long>> semigroup_member(long m,
                                                      const SemigroupParams& p) {
  if (m < 0) return std::nullopt;
  for (long a = p.k; a * p.l1 <= m; ++a) {
    long rest = m - a * p.l1;
    if (rest % p.l2 == 0 && rest / p.l2 >= p.k) return std::make_pair(a, rest / p.l2);
  }
  return std::nullopt;
}

long frobenius_conductor(const SemigroupParams& p) {
  long bound;
  if (p.l1 == 1 || p.l2 == 1) {
    bound = p.k * p.l1 + p.k * p.l2;
  } else {
    // Bezout 1 = s1*l1 + s2*l2 with s1 < 0
    long s1 = 0;
    for (long t = 1; t < p.l2; ++t) {
      if ((t * p.l1) % p.l2 == 1) {
        s1 = t - p.l2;  // negative representative
        break;
      }
    }
    bound = (p.l2 - 1) * (-s1) * p.l1 + p.k * p.l1 + p.k * p.l2;
  }
  // everything at or above the bound is representable; scan down for the
  // least m with [m, bound] fully representable
  if (!semigroup_member(bound, p).has_value())
    throw_internal("conductor bound is not representable");
  long m = bound;
  while (m - 1 >= 0 && semigroup_member(m - 1, p).has_value()) --m;
  return m;
}

Polynomial::NonnegCheck power_nonneg(const Polynomial& f, unsigned long k) {
  return f.pow(k).nonneg_coefficients();
}

namespace {

// Weight making v the strict minimizer of <w, .> over the support: the
// vertex certificate. Scaled so every gap is at least 1.
std::optional<std::vector<Rational>> separating_weight(
    const Exponents& v, const std::vector<Exponents>& support) {
  const int n = static_cast<int>(v.size());
  LinearProgram lp;
  lp.num_vars = n;  // w free
  for (const auto& s : support) {
    if (s == v) continue;
    LpConstraint c;
    c.row.resize(n);
    for (int i = 0; i < n; ++i) c.row[i] = Rational(s[i] - v[i]);
    c.rel = Relation::kGreaterEq;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  return feasible_point(lp);
}

// Weight with <w, beta - v> >= 1 and <w, s - v> >= <w, beta - v> + 1 for
// every other support point s: beta is the unique w-closest point to v.
std::optional<std::vector<Rational>> unique_closest_certificate(
    const Exponents& v, const Exponents& beta,
    const std::vector<Exponents>& support) {
  const int n = static_cast<int>(v.size());
  LinearProgram lp;
  lp.num_vars = n;  // w free
  {
    LpConstraint c;
    c.row.resize(n);
    for (int i = 0; i < n; ++i) c.row[i] = Rational(beta[i] - v[i]);
    c.rel = Relation::kGreaterEq;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  for (const auto& s : support) {
    if (s == v || s == beta) continue;
    LpConstraint c;
    c.row.resize(n);
    for (int i = 0; i < n; ++i) c.row[i] = Rational(s[i] - beta[i]);
    c.rel = Relation::kGreaterEq;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  return feasible_point(lp);
}

std::optional<DefiniteNegative> find_definite_negative(const Polynomial& f) {
  std::vector<Exponents> support;
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  SupportSet verts = newton_vertices(f);

  for (const auto& v : verts.points()) {
    if (f.coefficient(v) < 0) {
      auto w = separating_weight(v, support);
      if (!w) throw_internal("missing separating weight for a vertex");
      return DefiniteNegative{
          v, v, *w,
          "vertex exponent has a negative coefficient; the coefficient of "
          "x^(k*vertex) in f^k is its k-th power, negative for every odd k"};
    }
  }
  for (const auto& v : verts.points()) {
    for (const auto& [beta, c] : f.terms()) {
      if (c >= 0 || beta == v) continue;
      auto w = unique_closest_certificate(v, beta, support);
      if (w) {
        return DefiniteNegative{
            v, beta, *w,
            "(k-1)*vertex + beta decomposes over Log(f) only trivially, so "
            "the coefficient of x^((k-1)*vertex + beta) in f^k is "
            "k * c_vertex^(k-1) * c_beta < 0 for every k"};
      }
    }
  }
  return std::nullopt;
}

std::vector<Rational> all_ones(int n) {
  return std::vector<Rational>(n, Rational(1));
}

}  // namespace

bool verify_definite_negative(const Polynomial& f, const DefiniteNegative& dn) {
  const int n = f.nvars();
  if (static_cast<int>(dn.vertex.size()) != n ||
      static_cast<int>(dn.beta.size()) != n ||
      static_cast<int>(dn.weight.size()) != n)
    return false;
  auto dot_gap = [&](const Exponents& s) {
    Rational g(0);
    for (int i = 0; i < n; ++i) g += dn.weight[i] * Rational(s[i] - dn.vertex[i]);
    return g;
  };
  if (dn.beta == dn.vertex) {
    // negative-vertex pattern: the weight exposes the vertex strictly
    if (f.coefficient(dn.vertex) >= 0) return false;
    for (const auto& [e, c] : f.terms())
      if (e != dn.vertex && dot_gap(e) <= 0) return false;
    return true;
  }
  if (f.coefficient(dn.vertex) <= 0) return false;
  if (f.coefficient(dn.beta) >= 0) return false;
  Rational mu = dot_gap(dn.beta);
  if (mu <= 0) return false;
  for (const auto& [e, c] : f.terms()) {
    if (e == dn.vertex || e == dn.beta) continue;
    if (dot_gap(e) <= mu) return false;
  }
  return true;
}

HypothesesReport check_hypotheses(const Polynomial& f, long probe_powers) {
  if (f.is_zero()) throw_precondition("check_hypotheses requires f != 0");
  if (probe_powers < 0) throw_precondition("probe budget must be nonnegative");
  HypothesesReport rep;
  rep.value_at_ones = f.evaluate(all_ones(f.nvars()));
  rep.sign_ok = rep.value_at_ones > 0;
  rep.probe_powers = probe_powers;
  Polynomial cur = Polynomial::constant(f.nvars(), 1);
  for (long k = 1; k <= probe_powers; ++k) {
    cur = cur * f;
    if (cur.nonneg_coefficients().nonneg) {
      rep.first_nonneg_power = k;
      break;
    }
  }
  rep.addass = check_addass(f);
  rep.definite_negative = find_definite_negative(f);
  return rep;
}

StabilizationReport stabilize(const Polynomial& f, long max_power) {
  if (f.is_zero()) throw_precondition("stabilize requires f != 0");
  if (max_power < 1) throw_precondition("stabilize requires max_power >= 1");
  StabilizationReport rep;
  Rational at_ones = f.evaluate(all_ones(f.nvars()));
  if (at_ones <= 0) {
    rep.outcome = StabilizationReport::Outcome::kRejected;
    rep.reason = "f(1,...,1) = " + rational_str(at_ones) +
                 " is not positive, so no power can have only nonnegative "
                 "coefficients";
    return rep;
  }

  std::vector<PowerCheckRow> rows;
  Polynomial cur = Polynomial::constant(f.nvars(), 1);
  std::optional<std::pair<long, long>> pair;
  for (long k = 1; k <= max_power; ++k) {
    cur = cur * f;
    auto check = cur.nonneg_coefficients();
    rows.push_back({k, check.nonneg, check.witness});
    if (k >= 2 && rows[k - 1].nonneg && rows[k - 2].nonneg) {
      pair = std::make_pair(k - 1, k);
      break;
    }
  }
  if (!pair) {
    rep.outcome = StabilizationReport::Outcome::kNoPowerFound;
    rep.max_power = max_power;
    rep.witnesses = std::move(rows);
    return rep;
  }

  long conductor = frobenius_conductor(SemigroupParams(pair->first, pair->second, 1));
  for (long k = static_cast<long>(rows.size()) + 1; k <= conductor; ++k) {
    cur = cur * f;
    auto check = cur.nonneg_coefficients();
    rows.push_back({k, check.nonneg, check.witness});
  }

  long k0 = conductor + 1;
  while (k0 - 1 >= 1 && rows[k0 - 2].nonneg) --k0;

  rep.outcome = StabilizationReport::Outcome::kStabilized;
  rep.k0 = k0;
  rep.pair = *pair;
  rep.conductor = conductor;
  if (k0 > 1) rep.minimality = rows[k0 - 2];
  rep.checked = std::move(rows);
  return rep;
}

StabilizationReport odd_power_corollary(const Polynomial& f, long l,
                                        long max_power) {
  if (l < 1 || l % 2 == 0) throw_precondition("the exponent l must be odd");
  auto check = f.pow(static_cast<unsigned long>(l)).nonneg_coefficients();
  if (!check.nonneg)
    throw_precondition("hypothesis failure: f^l has a negative coefficient");
  if (f.is_zero()) {
    // all powers of 0 trivially have no negative coefficients
    StabilizationReport rep;
    rep.outcome = StabilizationReport::Outcome::kStabilized;
    rep.k0 = 1;
    rep.pair = {1, 2};
    rep.conductor = frobenius_conductor(SemigroupParams(1, 2, 1));
    for (long k = 1; k <= rep.conductor; ++k)
      rep.checked.push_back({k, true, std::nullopt});
    return rep;
  }
  // f != 0 and f^l in P+ force f^l(1,...,1) > 0; odd l fixes the sign of
  // f(1,...,1), so stabilize never rejects here
  return stabilize(f, max_power);
}

}  // namespace polycert
