#include "moip/instance.hpp"

#include <algorithm>

namespace moip {

bool MoipInstance::is_dualized(std::size_t row) const {
  return std::find(dualized_rows.begin(), dualized_rows.end(), row) !=
         dualized_rows.end();
}

void MoipInstance::validate() const {
  const std::size_t k = num_objectives();
  const std::size_t n = num_vars();
  const std::size_t m = num_rows();
  if (k == 0 || n == 0) {
    throw PreconditionError("instance needs k >= 1 objectives and n >= 1 variables");
  }
  for (const auto& row : C) {
    if (row.size() != n) throw PreconditionError("ragged objective matrix");
  }
  for (const auto& row : A) {
    if (row.size() != n) throw PreconditionError("ragged constraint matrix");
  }
  if (b.size() != m) throw PreconditionError("rhs size mismatch");
  if (boxes.size() != n) throw PreconditionError("one box per variable required");
  for (const auto& box : boxes) {
    if (box.lo > box.hi) throw PreconditionError("empty variable box");
  }
  for (std::size_t r : dualized_rows) {
    if (r >= m) throw PreconditionError("dualized row index out of range");
  }
}

ObjVec MoipInstance::objective_value(const IntPoint& x) const {
  if (x.size() != num_vars()) throw PreconditionError("point dimension mismatch");
  ObjVec y(num_objectives());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Scalar v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      v += C[i][j] * static_cast<Scalar>(x[j]);
    }
    y[i] = v;
  }
  return y;
}

IpProblem MoipInstance::full_problem() const {
  IpProblem p;
  p.objective.assign(num_vars(), 0);
  p.boxes = boxes;
  for (std::size_t r = 0; r < num_rows(); ++r) {
    p.rows.push_back(LinRow{A[r], Relation::LessEq, b[r]});
  }
  return p;
}

IpProblem MoipInstance::kept_problem() const {
  IpProblem p;
  p.objective.assign(num_vars(), 0);
  p.boxes = boxes;
  for (std::size_t r = 0; r < num_rows(); ++r) {
    if (!is_dualized(r)) p.rows.push_back(LinRow{A[r], Relation::LessEq, b[r]});
  }
  return p;
}

std::vector<LinRow> MoipInstance::dualized_row_list() const {
  std::vector<LinRow> rows;
  for (std::size_t r : dualized_rows) {
    rows.push_back(LinRow{A[r], Relation::LessEq, b[r]});
  }
  return rows;
}

std::vector<IntPoint> enumerate_x(const MoipInstance& inst, std::uint64_t cap) {
  inst.validate();
  return enumerate_feasible(inst.full_problem(), cap);
}

std::vector<IntPoint> enumerate_q(const MoipInstance& inst, std::uint64_t cap) {
  inst.validate();
  return enumerate_feasible(inst.kept_problem(), cap);
}

}  // namespace moip
