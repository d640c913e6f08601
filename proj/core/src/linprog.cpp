#include "moip/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace moip {

namespace {

constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

// Standard-form tableau: maximize c'u subject to Au {<=,=,>=} b, u >= 0.
// Solved by the textbook two-phase method with explicit slack, surplus and
// artificial columns.
struct Tableau {
  std::size_t m = 0;                      // structural rows
  std::size_t n = 0;                      // total columns (incl. slack/artificial)
  std::vector<std::vector<Scalar>> a;     // m x n
  std::vector<Scalar> b;                  // m, kept nonnegative
  std::vector<Scalar> cost;               // n, phase-2 objective (maximize)
  std::vector<int> basis;                 // m, basic column per row
  std::size_t num_artificial = 0;
  std::size_t first_artificial = 0;
};

struct SimplexLimits {
  std::size_t dantzig_budget;
  std::size_t max_iters;
};

enum class PivotResult { Optimal, Unbounded };

// Runs simplex iterations on (a, b, basis) maximizing `cost`, skipping
// columns marked banned. Dantzig pricing first, Bland afterwards; the hard
// cap trips a NumericalError so a stall can never return a wrong status.
PivotResult run_simplex(Tableau& t, const std::vector<Scalar>& cost,
                        const std::vector<bool>& banned,
                        const SimplexLimits& lim) {
  const std::size_t m = t.m, n = t.n;
  std::vector<Scalar> reduced(n);
  for (std::size_t iter = 0; iter < lim.max_iters; ++iter) {
    // reduced cost: c_j - c_B' B^-1 A_j, computed directly from the tableau
    // (rows are kept in B^-1 A form).
    for (std::size_t j = 0; j < n; ++j) {
      if (banned[j]) {
        reduced[j] = 0;
        continue;
      }
      Scalar z = 0;
      for (std::size_t i = 0; i < m; ++i) z += cost[t.basis[i]] * t.a[i][j];
      reduced[j] = cost[j] - z;
    }

    const bool use_bland = iter >= lim.dantzig_budget;
    int enter = -1;
    if (use_bland) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!banned[j] && reduced[j] > kOptTol) {
          enter = static_cast<int>(j);
          break;
        }
      }
    } else {
      Scalar best = kOptTol;
      for (std::size_t j = 0; j < n; ++j) {
        if (!banned[j] && reduced[j] > best) {
          best = reduced[j];
          enter = static_cast<int>(j);
        }
      }
    }
    if (enter < 0) return PivotResult::Optimal;

    int leave = -1;
    Scalar best_ratio = kInf;
    for (std::size_t i = 0; i < m; ++i) {
      const Scalar aij = t.a[i][static_cast<std::size_t>(enter)];
      if (aij > kOptTol) {
        const Scalar ratio = t.b[i] / aij;
        if (ratio < best_ratio - kOptTol ||
            (ratio < best_ratio + kOptTol &&
             (leave < 0 || t.basis[i] < t.basis[static_cast<std::size_t>(leave)]))) {
          best_ratio = ratio;
          leave = static_cast<int>(i);
        }
      }
    }
    if (leave < 0) return PivotResult::Unbounded;

    // pivot
    const auto r = static_cast<std::size_t>(leave);
    const auto s = static_cast<std::size_t>(enter);
    const Scalar piv = t.a[r][s];
    for (std::size_t j = 0; j < n; ++j) t.a[r][j] /= piv;
    t.b[r] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const Scalar f = t.a[i][s];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) t.a[i][j] -= f * t.a[r][j];
      t.b[i] -= f * t.b[r];
      if (std::fabs(t.b[i]) < 1e-13) t.b[i] = 0;
    }
    t.basis[r] = enter;
  }
  throw NumericalError("simplex iteration guard exceeded");
}

struct StandardForm {
  // u-space problem plus the affine map back to the original variables:
  // x[orig] = shift + sum(sign * u[col]).
  std::vector<Scalar> cost;
  std::vector<LinRow> rows;
  struct VarMap {
    Scalar shift = 0;
    int pos_col = -1;  // + u
    int neg_col = -1;  // - u (free variables only)
    Scalar sign = 1;   // applied to pos_col
  };
  std::vector<VarMap> map;
  Scalar offset = 0;
  std::size_t num_u = 0;
};

// Rewrites arbitrary bounds into u >= 0 variables:
//   finite lower:            x = lo + u
//   upper only:              x = hi - u
//   free:                    x = u+ - u-
// Finite uppers that coexist with a finite lower become extra rows.
StandardForm to_standard(const LpProblem& p) {
  const std::size_t n = p.num_vars();
  std::vector<Scalar> lo(n, 0), hi(n, kInf);
  if (!p.lower.empty()) {
    if (p.lower.size() != n) throw PreconditionError("lower bound size mismatch");
    lo = p.lower;
  }
  if (!p.upper.empty()) {
    if (p.upper.size() != n) throw PreconditionError("upper bound size mismatch");
    hi = p.upper;
  }

  std::vector<Scalar> c = p.objective;
  if (p.direction == Direction::Minimize) {
    for (auto& v : c) v = -v;
  }

  StandardForm sf;
  sf.map.resize(n);
  std::size_t u = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > hi[j] + kFeasTol) {
      throw PreconditionError("variable bounds are crossed");
    }
    auto& vm = sf.map[j];
    if (std::isfinite(lo[j])) {
      vm.shift = lo[j];
      vm.sign = 1;
      vm.pos_col = static_cast<int>(u++);
    } else if (std::isfinite(hi[j])) {
      vm.shift = hi[j];
      vm.sign = -1;
      vm.pos_col = static_cast<int>(u++);
    } else {
      vm.pos_col = static_cast<int>(u++);
      vm.neg_col = static_cast<int>(u++);
    }
  }
  sf.num_u = u;

  sf.cost.assign(u, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& vm = sf.map[j];
    sf.offset += c[j] * vm.shift;
    sf.cost[static_cast<std::size_t>(vm.pos_col)] += c[j] * vm.sign;
    if (vm.neg_col >= 0) sf.cost[static_cast<std::size_t>(vm.neg_col)] -= c[j];
  }

  auto push_row = [&](const std::vector<Scalar>& coeffs, Relation rel,
                      Scalar rhs) {
    LinRow row;
    row.coeffs.assign(u, 0);
    row.rel = rel;
    row.rhs = rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar a = coeffs[j];
      if (a == 0) continue;
      const auto& vm = sf.map[j];
      row.rhs -= a * vm.shift;
      row.coeffs[static_cast<std::size_t>(vm.pos_col)] += a * vm.sign;
      if (vm.neg_col >= 0) row.coeffs[static_cast<std::size_t>(vm.neg_col)] -= a;
    }
    sf.rows.push_back(std::move(row));
  };

  for (const auto& row : p.rows) {
    if (row.coeffs.size() != n) {
      throw PreconditionError("row coefficient length mismatch");
    }
    push_row(row.coeffs, row.rel, row.rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(lo[j]) && std::isfinite(hi[j]) && hi[j] > lo[j]) {
      std::vector<Scalar> e(n, 0);
      e[j] = 1;
      push_row(e, Relation::LessEq, hi[j]);
    } else if (std::isfinite(lo[j]) && std::isfinite(hi[j])) {
      // lo == hi pins the variable
      std::vector<Scalar> e(n, 0);
      e[j] = 1;
      push_row(e, Relation::Equal, hi[j]);
    }
  }
  return sf;
}

}  // namespace

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: size mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

SolveOutcome lp_solve(const LpProblem& p) {
  if (p.num_vars() == 0) throw PreconditionError("LP needs at least one variable");
  for (const auto& v : p.objective) {
    if (!std::isfinite(v)) throw PreconditionError("objective must be finite");
  }
  StandardForm sf = to_standard(p);

  const std::size_t m = sf.rows.size();
  const std::size_t nu = sf.num_u;

  // Column layout: [structural u | slack/surplus | artificial].
  std::size_t extra = 0;
  for (const auto& r : sf.rows) {
    if (r.rel != Relation::Equal) ++extra;
  }
  Tableau t;
  t.m = m;
  t.first_artificial = nu + extra;
  t.n = nu + extra + m;  // at most one artificial per row
  t.a.assign(m, std::vector<Scalar>(t.n, 0));
  t.b.assign(m, 0);
  t.basis.assign(m, -1);

  std::size_t slack_col = nu;
  std::size_t art_col = t.first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = sf.rows[i];
    const bool flip = row.rhs < 0;
    const Scalar sgn = flip ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nu; ++j) t.a[i][j] = sgn * row.coeffs[j];
    t.b[i] = sgn * row.rhs;
    Relation rel = row.rel;
    if (flip && rel == Relation::LessEq) rel = Relation::GreaterEq;
    else if (flip && rel == Relation::GreaterEq) rel = Relation::LessEq;

    if (rel == Relation::LessEq) {
      t.a[i][slack_col] = 1;  // slack
      t.basis[i] = static_cast<int>(slack_col);
      ++slack_col;
    } else if (rel == Relation::GreaterEq) {
      t.a[i][slack_col] = -1;  // surplus
      ++slack_col;
      t.a[i][art_col] = 1;
      t.basis[i] = static_cast<int>(art_col);
      ++art_col;
      ++t.num_artificial;
    } else {
      t.a[i][art_col] = 1;
      t.basis[i] = static_cast<int>(art_col);
      ++art_col;
      ++t.num_artificial;
    }
  }
  t.n = art_col;  // trim unused artificial columns
  for (auto& row : t.a) row.resize(t.n);

  const SimplexLimits lim{200 + 20 * (m + t.n), 20000 + 200 * (m + t.n)};
  std::vector<bool> banned(t.n, false);

  // Phase 1: drive the artificials to zero.
  if (t.num_artificial > 0) {
    std::vector<Scalar> phase1(t.n, 0);
    for (std::size_t j = t.first_artificial; j < t.n; ++j) phase1[j] = -1;
    run_simplex(t, phase1, banned, lim);
    Scalar art_sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(t.basis[i]) >= t.first_artificial) {
        art_sum += t.b[i];
      }
    }
    if (art_sum > kFeasTol) {
      SolveOutcome out;
      out.status = SolveOutcome::Status::Infeasible;
      return out;
    }
    // Pivot lingering zero-valued artificials out of the basis when possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(t.basis[i]) < t.first_artificial) continue;
      int enter = -1;
      for (std::size_t j = 0; j < t.first_artificial; ++j) {
        if (std::fabs(t.a[i][j]) > kFeasTol) {
          enter = static_cast<int>(j);
          break;
        }
      }
      if (enter < 0) continue;  // redundant row, keep the zero artificial
      const auto s = static_cast<std::size_t>(enter);
      const Scalar piv = t.a[i][s];
      for (std::size_t j = 0; j < t.n; ++j) t.a[i][j] /= piv;
      t.b[i] /= piv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == i) continue;
        const Scalar f = t.a[r][s];
        if (f == 0) continue;
        for (std::size_t j = 0; j < t.n; ++j) t.a[r][j] -= f * t.a[i][j];
        t.b[r] -= f * t.b[i];
      }
      t.basis[i] = enter;
    }
    for (std::size_t j = t.first_artificial; j < t.n; ++j) banned[j] = true;
  }

  // Phase 2.
  std::vector<Scalar> phase2(t.n, 0);
  for (std::size_t j = 0; j < nu; ++j) phase2[j] = sf.cost[j];
  if (run_simplex(t, phase2, banned, lim) == PivotResult::Unbounded) {
    SolveOutcome out;
    out.status = SolveOutcome::Status::Unbounded;
    return out;
  }

  std::vector<Scalar> uval(nu, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<std::size_t>(t.basis[i]) < nu) {
      uval[static_cast<std::size_t>(t.basis[i])] = t.b[i];
    }
  }

  SolveOutcome out;
  out.status = SolveOutcome::Status::Optimal;
  out.solution.resize(p.num_vars());
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const auto& vm = sf.map[j];
    Scalar x = vm.shift + vm.sign * uval[static_cast<std::size_t>(vm.pos_col)];
    if (vm.neg_col >= 0) x -= uval[static_cast<std::size_t>(vm.neg_col)];
    out.solution[j] = x;
  }
  out.value = dot(p.objective, out.solution);

  // Verify the claimed status before reporting it.
  for (const auto& row : p.rows) {
    const Scalar lhs = dot(row.coeffs, out.solution);
    const Scalar viol = row.rel == Relation::LessEq     ? lhs - row.rhs
                        : row.rel == Relation::GreaterEq ? row.rhs - lhs
                                                         : std::fabs(lhs - row.rhs);
    const Scalar scale = std::max<Scalar>(1, std::fabs(row.rhs));
    if (viol > kFeasTol * scale) {
      throw NumericalError("simplex produced an infeasible vertex");
    }
  }
  return out;
}

}  // namespace moip
