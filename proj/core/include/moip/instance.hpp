#pragma once

#include <cstddef>
#include <vector>

#include "moip/integer.hpp"
#include "moip/pareto.hpp"

namespace moip {

// max Cx subject to Ax <= b over integer boxes, with a designated subset of
// rows marked as the "complicating" constraints to be dualized.
struct MoipInstance {
  std::vector<std::vector<Scalar>> C;  // k x n objective matrix
  std::vector<std::vector<Scalar>> A;  // m x n constraint matrix
  std::vector<Scalar> b;               // m right-hand sides
  std::vector<std::size_t> dualized_rows;  // 0-based indices into A
  std::vector<IntBox> boxes;               // n finite integer intervals

  std::size_t num_objectives() const { return C.size(); }
  std::size_t num_vars() const { return C.empty() ? 0 : C.front().size(); }
  std::size_t num_rows() const { return A.size(); }
  std::size_t num_dualized() const { return dualized_rows.size(); }
  bool is_dualized(std::size_t row) const;

  void validate() const;

  ObjVec objective_value(const IntPoint& x) const;  // Cx

  // Full feasible region X: all rows plus boxes (zero objective).
  IpProblem full_problem() const;
  // Q: only the kept (non-dualized) rows plus boxes.
  IpProblem kept_problem() const;
  // Dualized rows (A^1, b^1) as <= rows over the original variables.
  std::vector<LinRow> dualized_row_list() const;
};

std::vector<IntPoint> enumerate_x(const MoipInstance& inst,
                                  std::uint64_t cap = kEnumCap);
std::vector<IntPoint> enumerate_q(const MoipInstance& inst,
                                  std::uint64_t cap = kEnumCap);

}  // namespace moip
