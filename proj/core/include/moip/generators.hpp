#pragma once

// Deterministic random instance generators for the bound-set experiment:
// biobjective binary knapsacks and linear assignment problems, each with one
// extra randomly generated constraint that is dualized.

#include "moip/instance.hpp"
#include "moip/rng.hpp"

namespace moip {

enum class ProblemKind { Knapsack, Assignment };

struct ExperimentConfig {
  ProblemKind problem = ProblemKind::Knapsack;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  Scalar grid_max = 2.5;
  std::size_t grid_count = 26;  // gridpoints per multiplier axis

  std::size_t knapsack_vars = 20;
  long long knapsack_obj_lo = 1, knapsack_obj_hi = 15;
  long long weight_lo = 1, weight_hi = 5;  // knapsack row and the extra row

  std::size_t assignment_size = 4;  // s agents and s tasks -> s^2 variables
  long long assignment_obj_lo = 1, assignment_obj_hi = 20;

  void validate() const;
};

// Binary knapsack: two objectives drawn from the knapsack objective range,
// one knapsack row from the weight range with rhs = ceil(sum/2), and one
// extra dualized row drawn the same way. The half-sum rhs rule keeps the
// instances neither trivial nor infeasible; x = 0 is always feasible.
MoipInstance gen_knapsack(const ExperimentConfig& cfg, std::size_t trial);

// Assignment: each row/column-sum-equals-one constraint is encoded as a pair
// of <= inequalities, objectives drawn from the assignment objective range,
// plus one extra dualized row from the weight range with the half-sum rhs.
MoipInstance gen_assignment(const ExperimentConfig& cfg, std::size_t trial);

MoipInstance gen_instance(const ExperimentConfig& cfg, std::size_t trial);

}  // namespace moip
