#pragma once

// Exact single-objective integer programming over bounded integer boxes, and
// linear optimization over the convex hull of an enumerated point set.

#include <cstdint>
#include <vector>

#include "moip/linprog.hpp"

namespace moip {

using IntPoint = std::vector<long long>;

struct IntBox {
  long long lo = 0;
  long long hi = 0;
};

struct IpProblem {
  std::vector<Scalar> objective;
  Direction direction = Direction::Maximize;
  std::vector<LinRow> rows;
  std::vector<IntBox> boxes;

  std::size_t num_vars() const { return objective.size(); }
};

// Product of box widths, saturating at 2^63-1.
std::uint64_t box_volume(const IpProblem& p);

bool point_feasible(const IpProblem& p, const IntPoint& x, Scalar tol = kFeasTol);

// All integer box points satisfying the rows, in lexicographic order.
std::vector<IntPoint> enumerate_feasible(const IpProblem& p,
                                         std::uint64_t cap = kEnumCap);

// Exact optimum by enumeration; ties resolved to the lexicographically
// smallest solution. Boxes above the cap raise CapExceeded (use
// ip_solve_branch_and_bound for those).
SolveOutcome ip_solve(const IpProblem& p, std::uint64_t cap = kEnumCap);
IntPoint optimal_point(const SolveOutcome& out);

// LP-bounded depth-first branch and bound with the same tie-breaking
// contract as ip_solve. Escape hatch for boxes beyond the enumeration cap.
SolveOutcome ip_solve_branch_and_bound(const IpProblem& p);

// max objective' (sum_i lambda_i q_i) subject to the extra rows holding at
// the convex combination, sum lambda = 1, lambda >= 0. The returned solution
// is the combination point itself (dimension of the q_i).
SolveOutcome conv_hull_lp(const std::vector<IntPoint>& points,
                          const std::vector<Scalar>& objective,
                          const std::vector<LinRow>& extra_rows);

}  // namespace moip
