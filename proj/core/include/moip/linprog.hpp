#pragma once

// Dense two-phase simplex for the tiny LPs this project needs. Robustness
// over speed: Dantzig pricing for a bounded number of pivots, then Bland's
// rule, with a hard iteration guard that raises instead of looping.

#include <vector>

#include "moip/common.hpp"

namespace moip {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Direction { Maximize, Minimize };

struct LinRow {
  std::vector<Scalar> coeffs;
  Relation rel = Relation::LessEq;
  Scalar rhs = 0;
};

struct LpProblem {
  std::vector<Scalar> objective;
  Direction direction = Direction::Maximize;
  std::vector<LinRow> rows;
  // Per-variable bounds; +-infinity allowed. Defaults to x >= 0 when empty.
  std::vector<Scalar> lower;
  std::vector<Scalar> upper;

  std::size_t num_vars() const { return objective.size(); }
};

struct SolveOutcome {
  enum class Status { Optimal, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  Scalar value = 0;
  std::vector<Scalar> solution;  // populated only when Optimal
  Scalar feas_tol = kFeasTol;
  Scalar opt_tol = kOptTol;

  bool optimal() const { return status == Status::Optimal; }
};

SolveOutcome lp_solve(const LpProblem& p);

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace moip
