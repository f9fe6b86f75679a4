#ifndef POLYCERT_LP_HPP
#define POLYCERT_LP_HPP

#include <optional>
#include <set>
#include <vector>

#include "polycert/rational.hpp"

namespace polycert {

enum class Relation { kLessEq, kEqual, kGreaterEq };

struct LpConstraint {
  std::vector<Rational> row;  // length num_vars
  Relation rel;
  Rational rhs;
};

/// Maximization program over exact rationals. Variables listed in
/// nonneg_vars are constrained to be >= 0; all others are free.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;  // maximized; may be shorter than num_vars
  std::vector<LpConstraint> constraints;
  std::set<int> nonneg_vars;
};

struct LpOutcome {
  enum class Kind { kOptimal, kInfeasible, kUnbounded };
  Kind kind;
  Rational value;                // on optimal
  std::vector<Rational> point;   // on optimal, satisfies all constraints exactly
};

/// Dense tableau simplex with Bland's pivoting rule (two phases, exact
/// arithmetic, guaranteed termination).
LpOutcome solve(const LinearProgram& lp);

/// Phase-1 only: an exact feasible point, or nullopt. The objective of the
/// program is ignored. An empty constraint set yields the origin.
std::optional<std::vector<Rational>> feasible_point(const LinearProgram& lp);

}  // namespace polycert

#endif  // POLYCERT_LP_HPP
