#include "moip/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace moip {

namespace {

std::vector<ObjVec> objective_values(const MoipInstance& inst,
                                     const std::vector<IntPoint>& xs) {
  std::vector<ObjVec> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(inst.objective_value(x));
  return ys;
}

ObjVec normalized_weight(ObjVec mu) {
  Scalar sum = 0;
  for (Scalar v : mu) sum += v;
  if (sum <= 0) throw PreconditionError("weight must be strictly positive");
  for (Scalar& v : mu) v /= sum;
  return mu;
}

}  // namespace

ExtendedSet nondominated_set(const MoipInstance& inst, std::uint64_t cap) {
  const auto xs = enumerate_x(inst, cap);
  return max_filter(objective_values(inst, xs));
}

IpProblem scalarize(const MoipInstance& inst, const ObjVec& mu) {
  inst.validate();
  if (mu.size() != inst.num_objectives()) {
    throw PreconditionError("weight dimension mismatch");
  }
  for (Scalar v : mu) {
    if (!(v > 0)) throw PreconditionError("scalarizing weight must be > 0");
  }
  IpProblem p = inst.full_problem();
  for (std::size_t j = 0; j < inst.num_vars(); ++j) {
    Scalar v = 0;
    for (std::size_t i = 0; i < inst.num_objectives(); ++i) {
      v += mu[i] * inst.C[i][j];
    }
    p.objective[j] = v;
  }
  return p;
}

namespace {

struct DichotomicSearch {
  const std::vector<IntPoint>& xs;
  const std::vector<ObjVec>& ys;
  // keyed on the objective value, lexicographically
  std::map<ObjVec, FrontierEntry> found;

  // Indices of all enumerated points attaining the scalarized maximum.
  std::vector<std::size_t> all_optima(const ObjVec& mu) const {
    Scalar best = -std::numeric_limits<Scalar>::infinity();
    for (const auto& y : ys) best = std::max(best, dot(mu, y));
    const Scalar tol = kDomTol * std::max<Scalar>(1, std::fabs(best));
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (dot(mu, ys[i]) >= best - tol) idx.push_back(i);
    }
    return idx;
  }

  void record(std::size_t i, const ObjVec& mu) {
    found.emplace(ys[i], FrontierEntry{xs[i], ys[i], normalized_weight(mu)});
  }

  // Solves with the weight orthogonal to the segment (left, right) where
  // left has the smaller first objective. New points above the segment are
  // recorded and the flanking gaps explored recursively; a value tie means
  // every optimum already lies on the segment and recursion stops.
  void between(const ObjVec& left, const ObjVec& right) {
    const ObjVec mu = {left[1] - right[1], right[0] - left[0]};
    if (!(mu[0] > 0) || !(mu[1] > 0)) return;  // degenerate gap
    const Scalar target = dot(mu, left);
    const auto opt = all_optima(mu);
    const Scalar value = dot(mu, ys[opt.front()]);
    for (std::size_t i : opt) record(i, mu);
    if (value > target + kDomTol * std::max<Scalar>(1, std::fabs(target))) {
      ObjVec lo = ys[opt.front()], hi = ys[opt.front()];
      for (std::size_t i : opt) {
        if (ys[i][0] < lo[0]) lo = ys[i];
        if (ys[i][0] > hi[0]) hi = ys[i];
      }
      between(left, lo);
      between(hi, right);
    }
  }
};

}  // namespace

SupportedFrontier supported_frontier(const MoipInstance& inst,
                                     std::uint64_t cap) {
  inst.validate();
  if (inst.num_objectives() != 2) {
    throw PreconditionError("supported_frontier handles k = 2 only");
  }
  SupportedFrontier frontier;
  const auto xs = enumerate_x(inst, cap);
  if (xs.empty()) {
    frontier.feasible = false;
    return frontier;
  }
  const auto ys = objective_values(inst, xs);
  DichotomicSearch search{xs, ys, {}};

  const ObjVec mu_right = {1.0, kExtremeWeightSkew};
  const ObjVec mu_left = {kExtremeWeightSkew, 1.0};
  ObjVec right_extreme, left_extreme;
  for (std::size_t i : search.all_optima(mu_right)) {
    search.record(i, mu_right);
    if (right_extreme.empty() || search.ys[i][0] > right_extreme[0]) {
      right_extreme = search.ys[i];
    }
  }
  for (std::size_t i : search.all_optima(mu_left)) {
    search.record(i, mu_left);
    if (left_extreme.empty() || search.ys[i][0] < left_extreme[0]) {
      left_extreme = search.ys[i];
    }
  }
  if (!approx_equal(left_extreme, right_extreme)) {
    search.between(left_extreme, right_extreme);
  }

  // The skewed extreme weights approximate lexicographic optima; a final
  // nondominance pass drops anything they let through.
  std::vector<ObjVec> keys;
  for (const auto& [y, entry] : search.found) keys.push_back(y);
  const auto nd = pareto_max(keys);
  for (auto& [y, entry] : search.found) {
    bool keep = false;
    for (const auto& p : nd) {
      if (approx_equal(p, y)) {
        keep = true;
        break;
      }
    }
    if (keep) frontier.entries.push_back(entry);
  }
  std::sort(frontier.entries.begin(), frontier.entries.end(),
            [](const FrontierEntry& a, const FrontierEntry& b) {
              return a.y[0] < b.y[0];
            });
  return frontier;
}

bool is_supported(const MoipInstance& inst, const IntPoint& x,
                  std::uint64_t cap) {
  inst.validate();
  if (!point_feasible(inst.full_problem(), x)) {
    throw PreconditionError("is_supported requires a feasible point");
  }
  const std::size_t k = inst.num_objectives();
  const ObjVec yx = inst.objective_value(x);
  const auto ys = objective_values(inst, enumerate_x(inst, cap));

  // Feasibility LP over mu: mu'(Cx - y) >= 0 for all feasible values y,
  // sum mu = 1, mu >= kWeightFloor.
  LpProblem lp;
  lp.objective.assign(k, 0);
  lp.lower.assign(k, kWeightFloor);
  lp.upper.assign(k, std::numeric_limits<Scalar>::infinity());
  for (const auto& y : ys) {
    LinRow row;
    row.rel = Relation::GreaterEq;
    row.rhs = 0;
    row.coeffs.resize(k);
    for (std::size_t i = 0; i < k; ++i) row.coeffs[i] = yx[i] - y[i];
    lp.rows.push_back(std::move(row));
  }
  LinRow norm;
  norm.coeffs.assign(k, 1);
  norm.rel = Relation::Equal;
  norm.rhs = 1;
  lp.rows.push_back(std::move(norm));

  return lp_solve(lp).optimal();
}

ObjVec ideal_point(const MoipInstance& inst, std::uint64_t cap) {
  const auto ys = objective_values(inst, enumerate_x(inst, cap));
  if (ys.empty()) throw PreconditionError("ideal point of an infeasible instance");
  ObjVec ideal = ys.front();
  for (const auto& y : ys) {
    for (std::size_t i = 0; i < y.size(); ++i) ideal[i] = std::max(ideal[i], y[i]);
  }
  return ideal;
}

ObjVec nadir_point(const MoipInstance& inst, std::uint64_t cap) {
  const auto ys = objective_values(inst, enumerate_x(inst, cap));
  if (ys.empty()) throw PreconditionError("nadir point of an infeasible instance");
  const auto nd = pareto_max(ys);
  ObjVec nadir = nd.front();
  for (const auto& y : nd) {
    for (std::size_t i = 0; i < y.size(); ++i) nadir[i] = std::min(nadir[i], y[i]);
  }
  return nadir;
}

}  // namespace moip
