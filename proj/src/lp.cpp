#include "polycert/lp.hpp"

#include <algorithm>

#include "polycert/error.hpp"

namespace polycert {

namespace {

// Canonical-form tableau: basis columns are unit columns, rhs >= 0 throughout.
struct Tableau {
  int rows = 0;
  int cols = 0;                       // structural + slack + artificial
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<int> basis;             // column basic in each row
  std::vector<bool> excluded;         // columns barred from entering

  void pivot(int r, int c) {
    Rational p = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= p;
    rhs[r] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Bland's rule: lowest-index improving column enters; among minimum-ratio
  // rows the one with the lowest basic variable index leaves.
  // Returns true on optimal, false on unbounded.
  bool run_simplex(const std::vector<Rational>& cost) {
    for (;;) {
      // reduced cost r_j = c_j - sum_i c_B(i) * a[i][j]
      int enter = -1;
      for (int j = 0; j < cols && enter < 0; ++j) {
        if (excluded[j]) continue;
        Rational rj = cost[j];
        for (int i = 0; i < rows; ++i) {
          if (cost[basis[i]] != 0 && a[i][j] != 0) rj -= cost[basis[i]] * a[i][j];
        }
        if (rj > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v(0);
    for (int i = 0; i < rows; ++i)
      if (cost[basis[i]] != 0) v += cost[basis[i]] * rhs[i];
    return v;
  }

  std::vector<Rational> column_values() const {
    std::vector<Rational> x(cols, Rational(0));
    for (int i = 0; i < rows; ++i) x[basis[i]] = rhs[i];
    return x;
  }
};

struct Prepared {
  Tableau t;
  std::vector<Rational> phase2_cost;          // on tableau columns
  std::vector<std::pair<int, int>> var_cols;  // original var -> (plus, minus or -1)
  int first_artificial = 0;
  bool feasible = false;
};

Prepared prepare(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (n < 0) throw Error(Error::Code::kArgument, "negative variable count");
  for (const auto& c : lp.constraints)
    if (static_cast<int>(c.row.size()) != n)
      throw_dimension("constraint row length does not match num_vars");
  if (static_cast<int>(lp.objective.size()) > n)
    throw_dimension("objective longer than num_vars");

  Prepared prep;
  // column layout: split structural vars, then slacks/surplus, then artificials
  prep.var_cols.resize(n);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    bool nn = lp.nonneg_vars.count(j) > 0;
    prep.var_cols[j] = {col, nn ? -1 : col + 1};
    col += nn ? 1 : 2;
  }
  const int m = static_cast<int>(lp.constraints.size());
  int slack_base = col;
  int n_slack = 0;
  for (const auto& c : lp.constraints)
    if (c.rel != Relation::kEqual) ++n_slack;
  int art_base = slack_base + n_slack;

  Tableau& t = prep.t;
  t.rows = m;
  t.cols = art_base + m;  // at most one artificial per row
  prep.first_artificial = art_base;
  t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, -1);
  t.excluded.assign(t.cols, false);

  int slack_at = slack_base;
  int art_at = art_base;
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    int sign = c.rhs < 0 ? -1 : 1;
    Relation rel = c.rel;
    if (sign < 0) {
      if (rel == Relation::kLessEq) rel = Relation::kGreaterEq;
      else if (rel == Relation::kGreaterEq) rel = Relation::kLessEq;
    }
    for (int j = 0; j < n; ++j) {
      Rational v = c.row[j] * sign;
      if (v == 0) continue;
      t.a[i][prep.var_cols[j].first] = v;
      if (prep.var_cols[j].second >= 0) t.a[i][prep.var_cols[j].second] = -v;
    }
    t.rhs[i] = c.rhs * sign;
    switch (rel) {
      case Relation::kLessEq:
        t.a[i][slack_at] = 1;
        t.basis[i] = slack_at++;
        break;
      case Relation::kGreaterEq:
        t.a[i][slack_at] = -1;
        ++slack_at;
        t.a[i][art_at] = 1;
        t.basis[i] = art_at++;
        ++n_art;
        break;
      case Relation::kEqual:
        t.a[i][art_at] = 1;
        t.basis[i] = art_at++;
        ++n_art;
        break;
    }
  }
  // unused artificial columns never enter
  for (int j = art_at; j < t.cols; ++j) t.excluded[j] = true;

  // phase 1: maximize minus the sum of artificials
  if (n_art > 0) {
    std::vector<Rational> cost(t.cols, Rational(0));
    for (int j = art_base; j < art_at; ++j) cost[j] = -1;
    t.run_simplex(cost);  // bounded below by construction, always optimal
    if (t.objective_value(cost) != 0) {
      prep.feasible = false;
      return prep;
    }
    // pivot any zero-level artificial out of the basis; a row with no
    // pivotable column is redundant and may keep it (excluded from entering)
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art_base) continue;
      for (int j = 0; j < art_base; ++j) {
        if (t.a[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }
  for (int j = art_base; j < t.cols; ++j) t.excluded[j] = true;
  prep.feasible = true;

  prep.phase2_cost.assign(t.cols, Rational(0));
  for (int j = 0; j < static_cast<int>(lp.objective.size()); ++j) {
    if (lp.objective[j] == 0) continue;
    prep.phase2_cost[prep.var_cols[j].first] = lp.objective[j];
    if (prep.var_cols[j].second >= 0)
      prep.phase2_cost[prep.var_cols[j].second] = -lp.objective[j];
  }
  return prep;
}

std::vector<Rational> recover_point(const Prepared& prep) {
  auto colvals = prep.t.column_values();
  std::vector<Rational> x(prep.var_cols.size(), Rational(0));
  for (std::size_t j = 0; j < prep.var_cols.size(); ++j) {
    x[j] = colvals[prep.var_cols[j].first];
    if (prep.var_cols[j].second >= 0) x[j] -= colvals[prep.var_cols[j].second];
  }
  return x;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  Prepared prep = prepare(lp);
  if (!prep.feasible) return {LpOutcome::Kind::kInfeasible, Rational(0), {}};
  if (!prep.t.run_simplex(prep.phase2_cost))
    return {LpOutcome::Kind::kUnbounded, Rational(0), {}};
  LpOutcome out;
  out.kind = LpOutcome::Kind::kOptimal;
  out.value = prep.t.objective_value(prep.phase2_cost);
  out.point = recover_point(prep);
  return out;
}

std::optional<std::vector<Rational>> feasible_point(const LinearProgram& lp) {
  Prepared prep = prepare(lp);
  if (!prep.feasible) return std::nullopt;
  return recover_point(prep);
}

}  // namespace polycert
