#pragma once

#include <cstddef>
#include <vector>

#include "adjmono/numeric.hpp"

namespace adjmono {

enum class Relation { LessEq, Equal, GreaterEq };

/// One row of a rational constraint system over variables x >= 0.
///
/// A row marked `strict` is meant as a strict inequality. The solver realizes
/// strictness through a shared slack variable: a.x >= b becomes
/// a.x >= b + delta (and a.x <= b becomes a.x <= b - delta) with delta
/// maximized, so the strict system is solvable iff the optimum delta is
/// positive. No epsilon perturbation, no floating point.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs = 0;
  bool strict = false;
};

struct LpResult {
  /// The weak system (strict rows relaxed to weak) has a solution.
  bool feasible = false;
  /// Every strict row is satisfiable with positive slack; equals `feasible`
  /// when no slack was requested.
  bool strictly_feasible = false;
  /// A solution when feasible; with maximize_slack, a point attaining the
  /// maximal uniform slack.
  std::vector<Rational> point;
  /// The maximized slack, capped at 1; zero when none was requested.
  Rational slack = 0;
};

/// Exact two-phase simplex over x >= 0 with Bland's pivoting rule, so it
/// terminates on degenerate systems. With `maximize_slack` the solver
/// maximizes the minimum slack of the rows marked strict (of all inequality
/// rows when none is marked).
LpResult simplex_feasible(std::size_t num_vars, std::vector<LinearConstraint> rows,
                          bool maximize_slack);

}  // namespace adjmono
