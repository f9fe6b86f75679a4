#include "polycert/membership.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

#include "polycert/error.hpp"
#include "polycert/lp.hpp"

namespace polycert {

SemiringPresentation::SemiringPresentation(std::vector<Polynomial> gens)
    : generators(std::move(gens)) {
  if (generators.empty())
    throw_precondition("presentation needs at least one generator");
  const int n = generators.front().nvars();
  for (const auto& g : generators) {
    if (g.nvars() != n)
      throw_dimension("generators with mismatched nvars");
    if (g.is_zero() || *g.degree() == 0)
      throw_precondition(
          "generators must be nonconstant; scalars are carried by the "
          "combination coefficients");
  }
}

std::vector<ProductEntry> products_up_to_degree(const SemiringPresentation& t,
                                                long degree_bound) {
  if (degree_bound < 0) throw_precondition("degree bound must be nonnegative");
  const int n = t.generators.front().nvars();
  const std::size_t m = t.generators.size();
  std::vector<long> degs(m);
  for (std::size_t i = 0; i < m; ++i) degs[i] = *t.generators[i].degree();

  std::vector<ProductEntry> out;
  std::map<std::string, std::size_t> seen;  // canonical print -> index
  std::vector<long> multi(m, 0);

  // lexicographic recursion keeps the first multidegree of duplicate values
  auto emit = [&](const Polynomial& value) {
    std::string key = value.str();
    if (seen.count(key)) return;
    seen.emplace(std::move(key), out.size());
    out.push_back({multi, value});
  };
  std::function<void(std::size_t, long, const Polynomial&)> rec =
      [&](std::size_t i, long budget, const Polynomial& acc) {
        if (i == m) {
          emit(acc);
          return;
        }
        Polynomial cur = acc;
        for (long e = 0; e * degs[i] <= budget; ++e) {
          multi[i] = e;
          if (e > 0) cur = cur * t.generators[i];
          rec(i + 1, budget - e * degs[i], cur);
        }
        multi[i] = 0;
      };
  rec(0, degree_bound, Polynomial::constant(n, 1));
  return out;
}

bool verify_membership_witness(const Polynomial& target,
                               const SemiringPresentation& t,
                               const std::vector<WitnessTerm>& witness) {
  Polynomial sum(target.nvars());
  for (const auto& term : witness) {
    if (term.coefficient < 0) return false;
    if (term.multidegree.size() != t.generators.size()) return false;
    Polynomial prod = Polynomial::constant(target.nvars(), term.coefficient);
    for (std::size_t i = 0; i < t.generators.size(); ++i)
      prod = prod * t.generators[i].pow(
                        static_cast<unsigned long>(term.multidegree[i]));
    sum = sum + prod;
  }
  return sum == target;
}

MembershipResult member_at_degree(const Polynomial& target,
                                  const SemiringPresentation& t,
                                  long degree_bound) {
  if (target.nvars() != t.generators.front().nvars())
    throw_dimension("target and generators with mismatched nvars");
  std::vector<ProductEntry> products = products_up_to_degree(t, degree_bound);

  // monomial span: union of all product supports and the target support
  std::set<Exponents> span;
  for (const auto& p : products)
    for (const auto& [e, c] : p.value.terms()) span.insert(e);
  for (const auto& [e, c] : target.terms()) span.insert(e);

  LinearProgram lp;
  lp.num_vars = static_cast<int>(products.size());
  for (int j = 0; j < lp.num_vars; ++j) lp.nonneg_vars.insert(j);
  for (const auto& mono : span) {
    LpConstraint row;
    row.rel = Relation::kEqual;
    row.rhs = target.coefficient(mono);
    row.row.resize(products.size());
    for (std::size_t j = 0; j < products.size(); ++j)
      row.row[j] = products[j].value.coefficient(mono);
    lp.constraints.push_back(std::move(row));
  }

  MembershipResult res;
  res.degree = degree_bound;
  auto point = feasible_point(lp);
  if (!point) {
    res.member = false;
    return res;
  }
  for (std::size_t j = 0; j < products.size(); ++j)
    if ((*point)[j] != 0)
      res.witness.push_back({(*point)[j], products[j].multidegree});
  if (!verify_membership_witness(target, t, res.witness))
    throw_internal("membership witness failed re-expansion");
  res.member = true;
  return res;
}

}  // namespace polycert
