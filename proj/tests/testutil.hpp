#pragma once

// Shared fixtures and independent oracles for the test suites. The worked
// instances here are the recurring desk examples; the oracles are brute
// force on purpose and must stay independent of the library code paths they
// check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "moip/instance.hpp"
#include "moip/pareto.hpp"
#include "moip/rng.hpp"

namespace testutil {

using moip::IntBox;
using moip::MoipInstance;
using moip::ObjVec;
using moip::Scalar;

// max [[1,-1/2],[-1/2,1]] x, x1 + x2 <= 3/2, x binary; constraint dualized.
inline MoipInstance instance_half_capacity() {
  MoipInstance inst;
  inst.C = {{1.0, -0.5}, {-0.5, 1.0}};
  inst.A = {{1.0, 1.0}};
  inst.b = {1.5};
  inst.dualized_rows = {0};
  inst.boxes = {{0, 1}, {0, 1}};
  return inst;
}

// Same objectives with x1 + x2 <= 1; unit-capacity sibling of the above.
inline MoipInstance instance_unit_capacity() {
  MoipInstance inst = instance_half_capacity();
  inst.b = {1.0};
  return inst;
}

// max [[2,1],[1,2]] x, x1 + x2 <= 2, x in {0,1,2}^2; constraint dualized.
inline MoipInstance instance_knapsack2() {
  MoipInstance inst;
  inst.C = {{2.0, 1.0}, {1.0, 2.0}};
  inst.A = {{1.0, 1.0}};
  inst.b = {2.0};
  inst.dualized_rows = {0};
  inst.boxes = {{0, 2}, {0, 2}};
  return inst;
}

// max identity objectives over 2x1+4x2 <= 5, 4x1+2x2 <= 5, x binary;
// both rows dualized.
inline MoipInstance instance_cross_constraints() {
  MoipInstance inst;
  inst.C = {{1.0, 0.0}, {0.0, 1.0}};
  inst.A = {{2.0, 4.0}, {4.0, 2.0}};
  inst.b = {5.0, 5.0};
  inst.dualized_rows = {0, 1};
  inst.boxes = {{0, 1}, {0, 1}};
  return inst;
}

inline MoipInstance instance_infeasible() {
  MoipInstance inst;
  inst.C = {{1.0}, {1.0}};
  inst.A = {{1.0}, {-1.0}};
  inst.b = {-1.0, 0.0};  // x <= -1 and x >= 0
  inst.dualized_rows = {};
  inst.boxes = {{0, 1}};
  return inst;
}

// ---- brute-force oracles -------------------------------------------------

inline bool oracle_strictly_dominated(const ObjVec& s, const ObjVec& t,
                                      Scalar tol = 1e-9) {
  bool some_strict = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > t[i] + tol) return false;
    if (s[i] < t[i] - tol) some_strict = true;
  }
  return some_strict;
}

inline std::vector<ObjVec> oracle_pareto_max(std::vector<ObjVec> pts,
                                             Scalar tol = 1e-9) {
  std::vector<ObjVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    bool duplicate = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (i == j) continue;
      if (oracle_strictly_dominated(pts[i], pts[j], tol)) dominated = true;
    }
    for (const auto& q : out) {
      if (moip::approx_equal(q, pts[i], tol)) duplicate = true;
    }
    if (!dominated && !duplicate) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- set comparison helpers ----------------------------------------------

inline bool same_point_set(const std::vector<ObjVec>& a,
                           std::vector<ObjVec> b, Scalar tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    bool hit = false;
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (moip::approx_equal(p, *it, tol)) {
        b.erase(it);
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return b.empty();
}

inline bool finite_equals(const moip::ExtendedSet& set,
                          const std::vector<ObjVec>& expected,
                          Scalar tol = 1e-9) {
  return set.is_finite() && same_point_set(set.points(), expected, tol);
}

// ---- random instance generators for property suites ----------------------

struct RandomInstanceOptions {
  std::size_t max_vars = 4;
  long long box_hi = 2;
  long long c_lo = -3, c_hi = 3;
  long long a_lo = -2, a_hi = 3;
  long long b_lo = 0, b_hi = 6;
  std::size_t max_rows = 3;
};

// k = 2 instance with x = 0 feasible whenever all rhs >= 0.
inline MoipInstance random_instance(moip::SplitMix64& rng,
                                    const RandomInstanceOptions& opt = {}) {
  MoipInstance inst;
  const auto n = static_cast<std::size_t>(rng.uniform_int(2, static_cast<long long>(opt.max_vars)));
  const auto m = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(opt.max_rows)));
  for (int i = 0; i < 2; ++i) {
    std::vector<Scalar> row(n);
    for (auto& v : row) v = static_cast<Scalar>(rng.uniform_int(opt.c_lo, opt.c_hi));
    inst.C.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Scalar> row(n);
    for (auto& v : row) v = static_cast<Scalar>(rng.uniform_int(opt.a_lo, opt.a_hi));
    inst.A.push_back(std::move(row));
    inst.b.push_back(static_cast<Scalar>(rng.uniform_int(opt.b_lo, opt.b_hi)));
  }
  // at least one dualized row
  inst.dualized_rows.push_back(static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<long long>(m) - 1)));
  inst.boxes.assign(n, IntBox{0, rng.uniform_int(1, opt.box_hi)});
  return inst;
}

// Nonnegative-integer constraint data with boxes matching the implied
// variable bounds, so the boxed enumeration region equals the true feasible
// region of the unbounded-integer program.
inline MoipInstance random_nonneg_instance(moip::SplitMix64& rng,
                                           std::size_t max_vars = 3,
                                           std::size_t max_rows = 2,
                                           long long b_hi = 4) {
  MoipInstance inst;
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(max_vars)));
  const auto m = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(max_rows)));
  for (int i = 0; i < 2; ++i) {
    std::vector<Scalar> row(n);
    for (auto& v : row) v = static_cast<Scalar>(rng.uniform_int(-2, 4));
    inst.C.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Scalar> row(n);
    for (auto& v : row) v = static_cast<Scalar>(rng.uniform_int(1, 3));
    inst.A.push_back(std::move(row));
    inst.b.push_back(static_cast<Scalar>(rng.uniform_int(1, b_hi)));
  }
  inst.dualized_rows.push_back(0);
  for (std::size_t j = 0; j < n; ++j) {
    long long bound = std::numeric_limits<long long>::max();
    for (std::size_t r = 0; r < m; ++r) {
      bound = std::min(bound, static_cast<long long>(
                                  std::floor(inst.b[r] / inst.A[r][j])));
    }
    inst.boxes.push_back(IntBox{0, bound});
  }
  return inst;
}

}  // namespace testutil
