#pragma once

// Continuous, convex-hull and Lagrangian relaxations of an instance, the
// grid-approximated Lagrangian dual bound set, the LP bound on the dual, the
// scalarized dual value, and a sampling falsifier for the feasible-region
// condition under which the dual is strong at supported solutions.

#include <functional>
#include <optional>
#include <vector>

#include "moip/frontier.hpp"

namespace moip {

// Componentwise nonnegative multipliers, one row per objective and one
// column per dualized constraint.
class MultiplierMatrix {
 public:
  MultiplierMatrix(std::size_t num_objectives, std::size_t num_dualized,
                   std::vector<Scalar> values);
  static MultiplierMatrix zero(std::size_t num_objectives,
                               std::size_t num_dualized);

  std::size_t num_objectives() const { return k_; }
  std::size_t num_dualized() const { return m1_; }
  Scalar at(std::size_t i, std::size_t j) const { return values_[i * m1_ + j]; }
  const std::vector<Scalar>& values() const { return values_; }

 private:
  std::size_t k_, m1_;
  std::vector<Scalar> values_;
};

// Equally spaced gridpoints in [0, max_value] on every axis of the
// multiplier space; count = 1 degenerates to the zero matrix.
struct MultiplierGrid {
  Scalar max_value = 2.5;
  std::size_t count = 26;

  Scalar axis_value(std::size_t index) const;
  std::uint64_t size(std::size_t axes) const;
  void for_each(std::size_t num_objectives, std::size_t num_dualized,
                const std::function<void(const MultiplierMatrix&)>& fn) const;
};

// Enumerates Q = {x in boxes : kept rows hold} once and caches the per-point
// objective values and dualized-row slacks; a relaxation for a given
// multiplier is then an objective shift plus a nondominance filter.
class LagrangianEvaluator {
 public:
  explicit LagrangianEvaluator(const MoipInstance& inst,
                               std::uint64_t cap = kEnumCap);

  bool q_empty() const { return q_points_.empty(); }
  const std::vector<IntPoint>& q_points() const { return q_points_; }

  // Feasible objective values of the relaxation, unfiltered.
  std::vector<ObjVec> shifted_values(const MultiplierMatrix& lambda) const;
  // Max of the relaxation; MinusInf when Q is empty.
  ExtendedSet relax(const MultiplierMatrix& lambda) const;

 private:
  std::size_t k_, m1_;
  std::vector<IntPoint> q_points_;
  std::vector<ObjVec> objective_values_;   // Cx per point
  std::vector<std::vector<Scalar>> slacks_;  // b^1 - A^1 x per point
};

ExtendedSet lagrangian_relaxation(const MoipInstance& inst,
                                  const MultiplierMatrix& lambda,
                                  std::uint64_t cap = kEnumCap);

// Min of the union of the grid relaxations' Max sets; near-duplicate points
// are collapsed before the filter so tolerance splits cannot survive it.
ExtendedSet dual_approx(const MoipInstance& inst, const MultiplierGrid& grid,
                        std::uint64_t cap = kEnumCap);
ExtendedSet dual_approx(const MoipInstance& inst,
                        const std::vector<MultiplierMatrix>& multipliers,
                        std::uint64_t cap = kEnumCap);

// A biobjective nondominated frontier stored by its extreme points, sorted
// by first objective ascending; the frontier itself is the induced
// piecewise-linear chain.
struct FrontierChain {
  enum class Status { Finite, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  std::vector<ObjVec> extreme_points;

  bool finite() const { return status == Status::Finite; }
};

// Largest second coordinate attainable on the chain at abscissa z1
// (nullopt outside the chain's range).
std::optional<Scalar> chain_height(const FrontierChain& chain, Scalar z1);
// Whether y lies on the chain polyline (within tol).
bool chain_contains(const FrontierChain& chain, const ObjVec& y,
                    Scalar tol = kDomTol);
// Set-ordering of a point set against the chain, evaluated by segment
// interpolation: every point must sit on or below the chain, none above.
bool preceq_chain(const std::vector<ObjVec>& points, const FrontierChain& chain,
                  Scalar tol = kDomTol);
// Extreme points plus the midpoint of every segment.
std::vector<ObjVec> chain_probe_points(const FrontierChain& chain);

// Extreme nondominated points of the continuous relaxation (k = 2),
// obtained by dichotomic LP scalarizations.
FrontierChain molp_relaxation_frontier(const MoipInstance& inst);

// Supported nondominated points in objective space (k = 2); the chain of
// segments joining them is the convex-hull relaxation frontier.
FrontierChain ch_relaxation_frontier(const MoipInstance& inst,
                                     std::uint64_t cap = kEnumCap);

// Extreme nondominated points of the LP over conv(Q) intersected with the
// dualized rows (k = 2); an upper bound on the Lagrangian dual.
FrontierChain ldlp_bound(const MoipInstance& inst, std::uint64_t cap = kEnumCap);

// Common value of min over multipliers of the scalarized relaxation maximum,
// computed exactly as the LP over conv(Q) subject to the dualized rows.
Scalar scalarized_dual_value(const MoipInstance& inst, const ObjVec& mu,
                             std::uint64_t cap = kEnumCap);

// Compares support functions of conv(Q intersect dualized rows) and of
// conv(Q) intersect dualized rows over sampled directions. A reported
// violation certifies the two sets differ; agreement proves nothing.
struct FrLagResult {
  bool violated = false;
  std::vector<Scalar> direction;
  Scalar gap = 0;
};
FrLagResult check_fr_lag(const MoipInstance& inst,
                         const std::vector<std::vector<Scalar>>& directions,
                         std::uint64_t cap = kEnumCap);

inline constexpr Scalar kFrLagGapTol = 1e-6;

}  // namespace moip
