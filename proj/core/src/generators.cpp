#include "moip/generators.hpp"

#include <cmath>

namespace moip {

namespace {

// Stream ids per generator role; drawing order inside a stream is fixed, so
// an instance is a pure function of (seed, trial).
enum Stream : std::uint64_t {
  kObjective0 = 0,
  kObjective1 = 1,
  kMainRows = 2,
  kExtraRow = 3,
};

std::vector<Scalar> draw_row(SplitMix64& rng, std::size_t n, long long lo,
                             long long hi) {
  std::vector<Scalar> row(n);
  for (std::size_t j = 0; j < n; ++j) {
    row[j] = static_cast<Scalar>(rng.uniform_int(lo, hi));
  }
  return row;
}

Scalar half_sum_rhs(const std::vector<Scalar>& row) {
  Scalar sum = 0;
  for (Scalar v : row) sum += v;
  return std::ceil(sum / 2);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (grid_count < 1) throw PreconditionError("grid count must be >= 1");
  if (!(grid_max > 0)) throw PreconditionError("grid max must be > 0");
  if (knapsack_obj_lo > knapsack_obj_hi || weight_lo > weight_hi ||
      assignment_obj_lo > assignment_obj_hi) {
    throw PreconditionError("coefficient ranges must be nonempty");
  }
  if (knapsack_vars < 1 || assignment_size < 1) {
    throw PreconditionError("instance size must be >= 1");
  }
}

MoipInstance gen_knapsack(const ExperimentConfig& cfg, std::size_t trial) {
  cfg.validate();
  const std::size_t n = cfg.knapsack_vars;
  MoipInstance inst;

  auto obj0 = SplitMix64::stream(cfg.seed, trial, kObjective0);
  auto obj1 = SplitMix64::stream(cfg.seed, trial, kObjective1);
  inst.C.push_back(draw_row(obj0, n, cfg.knapsack_obj_lo, cfg.knapsack_obj_hi));
  inst.C.push_back(draw_row(obj1, n, cfg.knapsack_obj_lo, cfg.knapsack_obj_hi));

  auto rows = SplitMix64::stream(cfg.seed, trial, kMainRows);
  auto knap = draw_row(rows, n, cfg.weight_lo, cfg.weight_hi);
  inst.b.push_back(half_sum_rhs(knap));
  inst.A.push_back(std::move(knap));

  auto extra_rng = SplitMix64::stream(cfg.seed, trial, kExtraRow);
  auto extra = draw_row(extra_rng, n, cfg.weight_lo, cfg.weight_hi);
  inst.b.push_back(half_sum_rhs(extra));
  inst.A.push_back(std::move(extra));
  inst.dualized_rows.push_back(1);

  inst.boxes.assign(n, IntBox{0, 1});
  inst.validate();
  return inst;
}

MoipInstance gen_assignment(const ExperimentConfig& cfg, std::size_t trial) {
  cfg.validate();
  const std::size_t s = cfg.assignment_size;
  const std::size_t n = s * s;  // x[a*s + t]: agent a assigned to task t
  MoipInstance inst;

  auto obj0 = SplitMix64::stream(cfg.seed, trial, kObjective0);
  auto obj1 = SplitMix64::stream(cfg.seed, trial, kObjective1);
  inst.C.push_back(draw_row(obj0, n, cfg.assignment_obj_lo, cfg.assignment_obj_hi));
  inst.C.push_back(draw_row(obj1, n, cfg.assignment_obj_lo, cfg.assignment_obj_hi));

  auto add_equality = [&](const std::vector<Scalar>& coeffs) {
    inst.A.push_back(coeffs);
    inst.b.push_back(1);
    std::vector<Scalar> neg(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) neg[j] = -coeffs[j];
    inst.A.push_back(std::move(neg));
    inst.b.push_back(-1);
  };
  for (std::size_t a = 0; a < s; ++a) {
    std::vector<Scalar> row(n, 0);
    for (std::size_t t = 0; t < s; ++t) row[a * s + t] = 1;
    add_equality(row);
  }
  for (std::size_t t = 0; t < s; ++t) {
    std::vector<Scalar> col(n, 0);
    for (std::size_t a = 0; a < s; ++a) col[a * s + t] = 1;
    add_equality(col);
  }

  auto extra_rng = SplitMix64::stream(cfg.seed, trial, kExtraRow);
  auto extra = draw_row(extra_rng, n, cfg.weight_lo, cfg.weight_hi);
  inst.b.push_back(half_sum_rhs(extra));
  inst.A.push_back(std::move(extra));
  inst.dualized_rows.push_back(inst.A.size() - 1);

  inst.boxes.assign(n, IntBox{0, 1});
  inst.validate();
  return inst;
}

MoipInstance gen_instance(const ExperimentConfig& cfg, std::size_t trial) {
  return cfg.problem == ProblemKind::Knapsack ? gen_knapsack(cfg, trial)
                                              : gen_assignment(cfg, trial);
}

}  // namespace moip
