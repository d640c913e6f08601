#include "moip/relaxations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace moip {

namespace {

constexpr Scalar kChainTol = 1e-7;  // value comparisons between LP optima

ObjVec weighted_objective(const MoipInstance& inst, const ObjVec& mu) {
  ObjVec c(inst.num_vars(), 0);
  for (std::size_t j = 0; j < inst.num_vars(); ++j) {
    for (std::size_t i = 0; i < inst.num_objectives(); ++i) {
      c[j] += mu[i] * inst.C[i][j];
    }
  }
  return c;
}

ObjVec image(const MoipInstance& inst, const std::vector<Scalar>& x) {
  ObjVec y(inst.num_objectives(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += inst.C[i][j] * x[j];
  }
  return y;
}

}  // namespace

MultiplierMatrix::MultiplierMatrix(std::size_t num_objectives,
                                   std::size_t num_dualized,
                                   std::vector<Scalar> values)
    : k_(num_objectives), m1_(num_dualized), values_(std::move(values)) {
  if (k_ == 0) throw PreconditionError("multiplier matrix needs k >= 1");
  if (values_.size() != k_ * m1_) {
    throw PreconditionError("multiplier matrix needs k*m1 entries");
  }
  for (Scalar v : values_) {
    if (!(v >= 0)) throw PreconditionError("multipliers must be nonnegative");
  }
}

MultiplierMatrix MultiplierMatrix::zero(std::size_t num_objectives,
                                        std::size_t num_dualized) {
  return MultiplierMatrix(num_objectives, num_dualized,
                          std::vector<Scalar>(num_objectives * num_dualized, 0));
}

Scalar MultiplierGrid::axis_value(std::size_t index) const {
  if (count < 1) throw PreconditionError("grid count must be >= 1");
  if (!(max_value > 0)) throw PreconditionError("grid max must be > 0");
  if (count == 1) return 0;
  return max_value * static_cast<Scalar>(index) / static_cast<Scalar>(count - 1);
}

std::uint64_t MultiplierGrid::size(std::size_t axes) const {
  std::uint64_t total = 1;
  for (std::size_t a = 0; a < axes; ++a) total *= count;
  return total;
}

void MultiplierGrid::for_each(
    std::size_t num_objectives, std::size_t num_dualized,
    const std::function<void(const MultiplierMatrix&)>& fn) const {
  const std::size_t axes = num_objectives * num_dualized;
  if (axes == 0) {
    fn(MultiplierMatrix(num_objectives, num_dualized, {}));
    return;
  }
  std::vector<std::size_t> idx(axes, 0);
  std::vector<Scalar> vals(axes, 0);
  for (;;) {
    for (std::size_t a = 0; a < axes; ++a) vals[a] = axis_value(idx[a]);
    fn(MultiplierMatrix(num_objectives, num_dualized, vals));
    std::size_t a = axes;
    while (a > 0) {
      --a;
      if (++idx[a] < count) break;
      idx[a] = 0;
      if (a == 0) return;
    }
  }
}

LagrangianEvaluator::LagrangianEvaluator(const MoipInstance& inst,
                                         std::uint64_t cap)
    : k_(inst.num_objectives()), m1_(inst.num_dualized()) {
  inst.validate();
  q_points_ = enumerate_q(inst, cap);
  objective_values_.reserve(q_points_.size());
  slacks_.reserve(q_points_.size());
  for (const auto& x : q_points_) {
    objective_values_.push_back(inst.objective_value(x));
    std::vector<Scalar> s(m1_);
    for (std::size_t d = 0; d < m1_; ++d) {
      const std::size_t r = inst.dualized_rows[d];
      Scalar ax = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        ax += inst.A[r][j] * static_cast<Scalar>(x[j]);
      }
      s[d] = inst.b[r] - ax;
    }
    slacks_.push_back(std::move(s));
  }
}

std::vector<ObjVec> LagrangianEvaluator::shifted_values(
    const MultiplierMatrix& lambda) const {
  if (lambda.num_objectives() != k_ || lambda.num_dualized() != m1_) {
    throw PreconditionError("multiplier matrix shape mismatch");
  }
  std::vector<ObjVec> out;
  out.reserve(q_points_.size());
  for (std::size_t p = 0; p < q_points_.size(); ++p) {
    ObjVec y = objective_values_[p];
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t d = 0; d < m1_; ++d) {
        y[i] += lambda.at(i, d) * slacks_[p][d];
      }
    }
    out.push_back(std::move(y));
  }
  return out;
}

ExtendedSet LagrangianEvaluator::relax(const MultiplierMatrix& lambda) const {
  return max_filter(shifted_values(lambda));
}

ExtendedSet lagrangian_relaxation(const MoipInstance& inst,
                                  const MultiplierMatrix& lambda,
                                  std::uint64_t cap) {
  return LagrangianEvaluator(inst, cap).relax(lambda);
}

ExtendedSet dual_approx(const MoipInstance& inst, const MultiplierGrid& grid,
                        std::uint64_t cap) {
  const LagrangianEvaluator eval(inst, cap);
  // Every relaxation of an empty Q is MinusInf, and so is their union.
  if (eval.q_empty()) return ExtendedSet::minus_inf();
  std::vector<ObjVec> pool;
  grid.for_each(inst.num_objectives(), inst.num_dualized(),
                [&](const MultiplierMatrix& lambda) {
                  const ExtendedSet nd = eval.relax(lambda);
                  for (const auto& y : nd.points()) pool.push_back(y);
                });
  return min_filter(pool);
}

std::optional<Scalar> chain_height(const FrontierChain& chain, Scalar z1) {
  if (!chain.finite() || chain.extreme_points.empty()) return std::nullopt;
  const auto& pts = chain.extreme_points;
  if (z1 < pts.front()[0] - kDomTol || z1 > pts.back()[0] + kDomTol) {
    return std::nullopt;
  }
  if (pts.size() == 1) return pts.front()[1];
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[i + 1];
    if (z1 <= b[0] + kDomTol) {
      const Scalar w = b[0] - a[0];
      if (w <= kDomTol) return std::max(a[1], b[1]);
      const Scalar t = std::clamp((z1 - a[0]) / w, 0.0, 1.0);
      return a[1] + t * (b[1] - a[1]);
    }
  }
  return pts.back()[1];
}

bool chain_contains(const FrontierChain& chain, const ObjVec& y, Scalar tol) {
  if (y.size() != 2) throw PreconditionError("chains are biobjective");
  const auto h = chain_height(chain, y[0]);
  return h && std::fabs(*h - y[1]) <= tol;
}

bool preceq_chain(const std::vector<ObjVec>& points, const FrontierChain& chain,
                  Scalar tol) {
  if (!chain.finite() || chain.extreme_points.empty()) return false;
  const auto& pts = chain.extreme_points;
  const Scalar xmin = pts.front()[0];
  const Scalar xmax = pts.back()[0];
  for (const auto& p : points) {
    if (p.size() != 2) throw PreconditionError("chains are biobjective");
    // (i) some chain point weakly above p
    if (p[0] > xmax + tol) return false;
    const auto h = chain_height(chain, std::max(p[0], xmin));
    if (!h || *h < p[1] - tol) return false;
    // (ii) no chain point strictly dominated by p
    const auto at = chain_height(chain, p[0]);
    if (at && *at < p[1] - tol) return false;
    for (const auto& c : pts) {
      if (dominated_by(c, p, tol)) return false;
    }
  }
  return true;
}

std::vector<ObjVec> chain_probe_points(const FrontierChain& chain) {
  std::vector<ObjVec> out = chain.extreme_points;
  for (std::size_t i = 0; i + 1 < chain.extreme_points.size(); ++i) {
    const auto& a = chain.extreme_points[i];
    const auto& b = chain.extreme_points[i + 1];
    out.push_back({(a[0] + b[0]) / 2, (a[1] + b[1]) / 2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Dichotomic search over an LP scalarization oracle. The oracle returns the
// image point of an optimal vertex for a strictly positive weight, or the
// problem status when not optimal.
struct LpDichotomic {
  std::function<SolveOutcome(const ObjVec& mu)> solve;
  const MoipInstance& inst;
  std::vector<ObjVec> points;
  FrontierChain::Status status = FrontierChain::Status::Finite;

  bool extreme(const ObjVec& mu, ObjVec& out) {
    const SolveOutcome res = solve(mu);
    if (res.status == SolveOutcome::Status::Unbounded) {
      status = FrontierChain::Status::Unbounded;
      return false;
    }
    if (res.status == SolveOutcome::Status::Infeasible) {
      status = FrontierChain::Status::Infeasible;
      return false;
    }
    out = image(inst, res.solution);
    return true;
  }

  void between(const ObjVec& left, const ObjVec& right, int depth) {
    if (depth > 64 || status != FrontierChain::Status::Finite) return;
    const ObjVec mu = {left[1] - right[1], right[0] - left[0]};
    if (!(mu[0] > 0) || !(mu[1] > 0)) return;
    const SolveOutcome res = solve(mu);
    if (!res.optimal()) return;  // gap weight cannot be unbounded/infeasible here
    const ObjVec y = image(inst, res.solution);
    const Scalar target = mu[0] * left[0] + mu[1] * left[1];
    const Scalar value = mu[0] * y[0] + mu[1] * y[1];
    if (value > target + kChainTol * std::max<Scalar>(1, std::fabs(target))) {
      points.push_back(y);
      between(left, y, depth + 1);
      between(y, right, depth + 1);
    }
  }

  FrontierChain run() {
    FrontierChain chain;
    ObjVec right, left;
    if (!extreme({1.0, kExtremeWeightSkew}, right) ||
        !extreme({kExtremeWeightSkew, 1.0}, left)) {
      chain.status = status;
      return chain;
    }
    points.push_back(right);
    if (!approx_equal(left, right, kChainTol)) {
      points.push_back(left);
      between(left, right, 0);
    }
    if (status != FrontierChain::Status::Finite) {
      chain.status = status;
      return chain;
    }

    // Nondominance pass (skewed extremes can admit a dominated vertex), then
    // canonical order and removal of collinear interior breakpoints.
    points = pareto_max(points, kChainTol);
    std::sort(points.begin(), points.end());
    std::vector<ObjVec> pruned;
    for (const auto& p : points) {
      pruned.push_back(p);
      while (pruned.size() >= 3) {
        const auto& a = pruned[pruned.size() - 3];
        const auto& b = pruned[pruned.size() - 2];
        const auto& c = pruned[pruned.size() - 1];
        const Scalar cross =
            (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        const Scalar scale = std::max<Scalar>(
            1, std::max(std::fabs(c[0] - a[0]), std::fabs(c[1] - a[1])));
        if (std::fabs(cross) <= kChainTol * scale) {
          pruned.erase(pruned.end() - 2);
        } else {
          break;
        }
      }
    }
    chain.status = FrontierChain::Status::Finite;
    chain.extreme_points = std::move(pruned);
    return chain;
  }
};

LpProblem continuous_relaxation(const MoipInstance& inst) {
  LpProblem lp;
  lp.objective.assign(inst.num_vars(), 0);
  lp.direction = Direction::Maximize;
  for (std::size_t r = 0; r < inst.num_rows(); ++r) {
    lp.rows.push_back(LinRow{inst.A[r], Relation::LessEq, inst.b[r]});
  }
  lp.lower.resize(inst.num_vars());
  lp.upper.resize(inst.num_vars());
  for (std::size_t j = 0; j < inst.num_vars(); ++j) {
    lp.lower[j] = static_cast<Scalar>(inst.boxes[j].lo);
    lp.upper[j] = static_cast<Scalar>(inst.boxes[j].hi);
  }
  return lp;
}

void require_biobjective(const MoipInstance& inst) {
  inst.validate();
  if (inst.num_objectives() != 2) {
    throw PreconditionError("frontier chains handle k = 2 only");
  }
}

}  // namespace

FrontierChain molp_relaxation_frontier(const MoipInstance& inst) {
  require_biobjective(inst);
  const LpProblem base = continuous_relaxation(inst);
  LpDichotomic search{
      [&](const ObjVec& mu) {
        LpProblem lp = base;
        lp.objective = weighted_objective(inst, mu);
        return lp_solve(lp);
      },
      inst,
      {},
      FrontierChain::Status::Finite};
  return search.run();
}

FrontierChain ch_relaxation_frontier(const MoipInstance& inst,
                                     std::uint64_t cap) {
  require_biobjective(inst);
  const SupportedFrontier frontier = supported_frontier(inst, cap);
  FrontierChain chain;
  if (!frontier.feasible) {
    chain.status = FrontierChain::Status::Infeasible;
    return chain;
  }
  chain.status = FrontierChain::Status::Finite;
  for (const auto& entry : frontier.entries) {
    chain.extreme_points.push_back(entry.y);
  }
  return chain;
}

FrontierChain ldlp_bound(const MoipInstance& inst, std::uint64_t cap) {
  require_biobjective(inst);
  const auto q = enumerate_q(inst, cap);
  FrontierChain chain;
  if (q.empty()) {
    chain.status = FrontierChain::Status::Infeasible;
    return chain;
  }
  const auto dual_rows = inst.dualized_row_list();
  LpDichotomic search{
      [&](const ObjVec& mu) {
        return conv_hull_lp(q, weighted_objective(inst, mu), dual_rows);
      },
      inst,
      {},
      FrontierChain::Status::Finite};
  return search.run();
}

Scalar scalarized_dual_value(const MoipInstance& inst, const ObjVec& mu,
                             std::uint64_t cap) {
  inst.validate();
  if (mu.size() != inst.num_objectives()) {
    throw PreconditionError("weight dimension mismatch");
  }
  for (Scalar v : mu) {
    if (!(v > 0)) throw PreconditionError("weight must be strictly positive");
  }
  const auto q = enumerate_q(inst, cap);
  if (q.empty()) {
    throw PreconditionError("scalarized dual of an instance with empty Q");
  }
  const SolveOutcome res =
      conv_hull_lp(q, weighted_objective(inst, mu), inst.dualized_row_list());
  if (res.status == SolveOutcome::Status::Infeasible) {
    // conv(Q) misses the dualized rows entirely; the dual diverges below.
    return -std::numeric_limits<Scalar>::infinity();
  }
  if (!res.optimal()) {
    throw NumericalError("scalarized dual LP reported unbounded");
  }
  return res.value;
}

FrLagResult check_fr_lag(const MoipInstance& inst,
                         const std::vector<std::vector<Scalar>>& directions,
                         std::uint64_t cap) {
  inst.validate();
  const auto xs = enumerate_x(inst, cap);
  const auto q = enumerate_q(inst, cap);
  if (xs.empty() || q.empty()) {
    throw PreconditionError("feasible-region check needs nonempty X and Q");
  }
  const auto dual_rows = inst.dualized_row_list();
  for (const auto& d : directions) {
    if (d.size() != inst.num_vars()) {
      throw PreconditionError("direction dimension mismatch");
    }
    // h1: support of conv(X) = max over the enumerated integer points.
    Scalar h1 = -std::numeric_limits<Scalar>::infinity();
    for (const auto& x : xs) {
      Scalar v = 0;
      for (std::size_t j = 0; j < d.size(); ++j) {
        v += d[j] * static_cast<Scalar>(x[j]);
      }
      h1 = std::max(h1, v);
    }
    const SolveOutcome res = conv_hull_lp(q, d, dual_rows);
    if (!res.optimal()) {
      throw NumericalError("support-function LP failed");
    }
    if (res.value - h1 > kFrLagGapTol) {
      return FrLagResult{true, d, res.value - h1};
    }
  }
  return FrLagResult{false, {}, 0};
}

}  // namespace moip
