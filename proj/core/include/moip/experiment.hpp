#pragma once

// The bound-set quality experiment: per trial, local-nadir lower bounds
// against the grid-approximated Lagrangian dual and the convex-hull frontier,
// with the scaled distance metric and strength flags aggregated over trials.

#include <iosfwd>
#include <string>

#include "moip/bound_sets.hpp"
#include "moip/generators.hpp"

namespace moip {

struct TrialResult {
  std::size_t trial = 0;
  BoundReport lagrangian;
  BoundReport convex_hull;
  // wall times are reporting-only and excluded from canonical serialization
  double wall_ms_lagrangian = 0;
  double wall_ms_convex_hull = 0;
};

struct MethodStats {
  Scalar mean_d = 0;
  Scalar sd_d = 0;  // (trials - 1) denominator; 0 and flagged when trials == 1
  std::size_t strong_count = 0;
};

struct ExperimentReport {
  ExperimentConfig cfg;
  std::vector<TrialResult> trial_results;
  MethodStats lagrangian;
  MethodStats convex_hull;
  bool sd_degenerate = false;  // single trial, sd reported as 0 by convention
};

// Runs cfg.trials independent trials. Any trial failure is rethrown with the
// trial index and seed in the message.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// One row per (trial, method): trial,method,d,gamma,strong,u_size,l_size,wall_ms
void write_csv(const ExperimentReport& report, std::ostream& os);
// JSON-like summary block with mean/sd/#strong per method.
void write_summary(const ExperimentReport& report, std::ostream& os);
// Deterministic serialization of the mathematical content (no timings):
// byte-identical for identical configs.
std::string canonical_serialization(const ExperimentReport& report);

}  // namespace moip
