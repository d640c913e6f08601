#include "moip/integer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace moip {

namespace {

void validate(const IpProblem& p) {
  const std::size_t n = p.num_vars();
  if (n == 0) throw PreconditionError("IP needs at least one variable");
  if (p.boxes.size() != n) throw PreconditionError("one box per variable required");
  for (const auto& box : p.boxes) {
    if (box.lo > box.hi) throw PreconditionError("empty variable box");
  }
  for (const auto& row : p.rows) {
    if (row.coeffs.size() != n) {
      throw PreconditionError("row coefficient length mismatch");
    }
  }
}

Scalar row_violation(const LinRow& row, const IntPoint& x) {
  Scalar lhs = 0;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    lhs += row.coeffs[j] * static_cast<Scalar>(x[j]);
  }
  switch (row.rel) {
    case Relation::LessEq:
      return lhs - row.rhs;
    case Relation::GreaterEq:
      return row.rhs - lhs;
    case Relation::Equal:
      return std::fabs(lhs - row.rhs);
  }
  return 0;
}

// Visits box points in lexicographic order; fn returns false to stop.
template <typename Fn>
void for_each_box_point(const std::vector<IntBox>& boxes, Fn&& fn) {
  const std::size_t n = boxes.size();
  IntPoint x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = boxes[j].lo;
  for (;;) {
    if (!fn(x)) return;
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (x[j] < boxes[j].hi) {
        ++x[j];
        for (std::size_t r = j + 1; r < n; ++r) x[r] = boxes[r].lo;
        break;
      }
      if (j == 0) return;
    }
  }
}

Scalar objective_at(const IpProblem& p, const IntPoint& x) {
  Scalar v = 0;
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    v += p.objective[j] * static_cast<Scalar>(x[j]);
  }
  return v;
}

}  // namespace

std::uint64_t box_volume(const IpProblem& p) {
  std::uint64_t vol = 1;
  for (const auto& box : p.boxes) {
    const auto w = static_cast<std::uint64_t>(box.hi - box.lo + 1);
    if (vol > std::numeric_limits<std::uint64_t>::max() / w) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    vol *= w;
  }
  return vol;
}

bool point_feasible(const IpProblem& p, const IntPoint& x, Scalar tol) {
  if (x.size() != p.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < p.boxes[j].lo || x[j] > p.boxes[j].hi) return false;
  }
  for (const auto& row : p.rows) {
    if (row_violation(row, x) > tol) return false;
  }
  return true;
}

std::vector<IntPoint> enumerate_feasible(const IpProblem& p, std::uint64_t cap) {
  validate(p);
  if (box_volume(p) > cap) {
    throw CapExceeded(
        "integer box exceeds the enumeration cap; use the branch-and-bound "
        "solver for boxes of this size");
  }
  std::vector<IntPoint> out;
  for_each_box_point(p.boxes, [&](const IntPoint& x) {
    bool ok = true;
    for (const auto& row : p.rows) {
      if (row_violation(row, x) > kFeasTol) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
    return true;
  });
  return out;
}

SolveOutcome ip_solve(const IpProblem& p, std::uint64_t cap) {
  validate(p);
  if (box_volume(p) > cap) {
    throw CapExceeded(
        "integer box exceeds the enumeration cap; use the branch-and-bound "
        "solver for boxes of this size");
  }
  const Scalar sign = p.direction == Direction::Maximize ? 1.0 : -1.0;
  bool found = false;
  Scalar best = 0;
  IntPoint best_x;
  for_each_box_point(p.boxes, [&](const IntPoint& x) {
    for (const auto& row : p.rows) {
      if (row_violation(row, x) > kFeasTol) return true;
    }
    const Scalar v = sign * objective_at(p, x);
    // Strict improvement only: lexicographic enumeration order makes the
    // first incumbent at the optimum the lexicographically smallest one.
    if (!found || v > best + kOptTol) {
      found = true;
      best = v;
      best_x = x;
    }
    return true;
  });

  SolveOutcome out;
  if (!found) {
    out.status = SolveOutcome::Status::Infeasible;
    return out;
  }
  out.status = SolveOutcome::Status::Optimal;
  out.value = sign * best;
  out.solution.assign(best_x.begin(), best_x.end());
  return out;
}

IntPoint optimal_point(const SolveOutcome& out) {
  if (!out.optimal()) throw PreconditionError("outcome is not optimal");
  IntPoint x(out.solution.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = std::llround(out.solution[j]);
  }
  return x;
}

namespace {

struct BnbState {
  const IpProblem* p = nullptr;
  bool found = false;
  Scalar best = 0;  // in maximize sign
  IntPoint best_x;
  Scalar sign = 1;
};

LpProblem relaxation_with_prefix(const IpProblem& p, const IntPoint& prefix) {
  LpProblem lp;
  lp.objective = p.objective;
  lp.direction = p.direction;
  lp.rows = p.rows;
  const std::size_t n = p.num_vars();
  lp.lower.resize(n);
  lp.upper.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j < prefix.size()) {
      lp.lower[j] = lp.upper[j] = static_cast<Scalar>(prefix[j]);
    } else {
      lp.lower[j] = static_cast<Scalar>(p.boxes[j].lo);
      lp.upper[j] = static_cast<Scalar>(p.boxes[j].hi);
    }
  }
  return lp;
}

void bnb_recurse(BnbState& st, IntPoint& prefix) {
  const IpProblem& p = *st.p;
  const std::size_t depth = prefix.size();
  if (depth == p.num_vars()) {
    for (const auto& row : p.rows) {
      if (row_violation(row, prefix) > kFeasTol) return;
    }
    const Scalar v = st.sign * objective_at(p, prefix);
    if (!st.found || v > st.best + kOptTol) {
      st.found = true;
      st.best = v;
      st.best_x = prefix;
    }
    return;
  }

  const SolveOutcome bound = lp_solve(relaxation_with_prefix(p, prefix));
  if (bound.status == SolveOutcome::Status::Infeasible) return;
  if (bound.status == SolveOutcome::Status::Optimal) {
    const Scalar ub = st.sign * bound.value;
    // Prune only strictly worse subtrees so value ties keep the
    // lexicographically smallest incumbent found by the DFS order.
    if (st.found && ub < st.best - kOptTol) return;
  }

  for (long long v = p.boxes[depth].lo; v <= p.boxes[depth].hi; ++v) {
    prefix.push_back(v);
    bnb_recurse(st, prefix);
    prefix.pop_back();
  }
}

}  // namespace

SolveOutcome ip_solve_branch_and_bound(const IpProblem& p) {
  validate(p);
  BnbState st;
  st.p = &p;
  st.sign = p.direction == Direction::Maximize ? 1.0 : -1.0;
  IntPoint prefix;
  prefix.reserve(p.num_vars());
  bnb_recurse(st, prefix);

  SolveOutcome out;
  if (!st.found) {
    out.status = SolveOutcome::Status::Infeasible;
    return out;
  }
  out.status = SolveOutcome::Status::Optimal;
  out.value = st.sign * st.best;
  out.solution.assign(st.best_x.begin(), st.best_x.end());
  return out;
}

SolveOutcome conv_hull_lp(const std::vector<IntPoint>& points,
                          const std::vector<Scalar>& objective,
                          const std::vector<LinRow>& extra_rows) {
  if (points.empty()) throw PreconditionError("conv_hull_lp needs points");
  const std::size_t n = points.front().size();
  if (objective.size() != n) {
    throw PreconditionError("conv_hull_lp objective dimension mismatch");
  }
  for (const auto& q : points) {
    if (q.size() != n) throw PreconditionError("conv_hull_lp ragged points");
  }

  const std::size_t p = points.size();
  LpProblem lp;
  lp.direction = Direction::Maximize;
  lp.objective.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    Scalar v = 0;
    for (std::size_t j = 0; j < n; ++j) {
      v += objective[j] * static_cast<Scalar>(points[i][j]);
    }
    lp.objective[i] = v;
  }
  for (const auto& row : extra_rows) {
    if (row.coeffs.size() != n) {
      throw PreconditionError("conv_hull_lp extra row dimension mismatch");
    }
    LinRow lrow;
    lrow.rel = row.rel;
    lrow.rhs = row.rhs;
    lrow.coeffs.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
      Scalar v = 0;
      for (std::size_t j = 0; j < n; ++j) {
        v += row.coeffs[j] * static_cast<Scalar>(points[i][j]);
      }
      lrow.coeffs[i] = v;
    }
    lp.rows.push_back(std::move(lrow));
  }
  LinRow convexity;
  convexity.coeffs.assign(p, 1);
  convexity.rel = Relation::Equal;
  convexity.rhs = 1;
  lp.rows.push_back(std::move(convexity));

  SolveOutcome lam = lp_solve(lp);
  if (!lam.optimal()) return lam;

  SolveOutcome out;
  out.status = SolveOutcome::Status::Optimal;
  out.value = lam.value;
  out.solution.assign(n, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.solution[j] += lam.solution[i] * static_cast<Scalar>(points[i][j]);
    }
  }
  return out;
}

}  // namespace moip
