#include "doctest.h"

#include <limits>

#include "moip/integer.hpp"
#include "moip/rng.hpp"
#include "testutil.hpp"

using namespace moip;

namespace {

IpProblem cross_constraint_ip() {
  IpProblem p;
  p.objective = {1, 1};
  p.rows.push_back({{2, 4}, Relation::LessEq, 5});
  p.rows.push_back({{4, 2}, Relation::LessEq, 5});
  p.boxes = {{0, 1}, {0, 1}};
  return p;
}

IpProblem random_ip(SplitMix64& rng) {
  IpProblem p;
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, 4));
  const auto m = static_cast<std::size_t>(rng.uniform_int(1, 3));
  p.objective.resize(n);
  for (auto& v : p.objective) v = static_cast<Scalar>(rng.uniform_int(-5, 5));
  for (std::size_t r = 0; r < m; ++r) {
    LinRow row;
    row.coeffs.resize(n);
    for (auto& v : row.coeffs) v = static_cast<Scalar>(rng.uniform_int(-3, 3));
    row.rhs = static_cast<Scalar>(rng.uniform_int(0, 6));
    p.rows.push_back(std::move(row));
  }
  p.boxes.assign(n, IntBox{0, rng.uniform_int(1, 2)});
  return p;
}

}  // namespace

TEST_CASE("enumerate_feasible lists the lattice in lexicographic order") {
  const auto pts = enumerate_feasible(cross_constraint_ip());
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == IntPoint{0, 0});
  CHECK(pts[1] == IntPoint{0, 1});
  CHECK(pts[2] == IntPoint{1, 0});
}

TEST_CASE("enumerate_feasible on the simplex constraint") {
  IpProblem p;
  p.objective = {0, 0};
  p.rows.push_back({{1, 1}, Relation::LessEq, 1});
  p.boxes = {{0, 1}, {0, 1}};
  const auto pts = enumerate_feasible(p);
  CHECK(pts == std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("enumerate_feasible of an empty region") {
  IpProblem p;
  p.objective = {0};
  p.rows.push_back({{1}, Relation::LessEq, -1});
  p.boxes = {{0, 3}};
  CHECK(enumerate_feasible(p).empty());
}

TEST_CASE("ip_solve on the two-unit knapsack") {
  IpProblem p;
  p.objective = {2, 1};
  p.rows.push_back({{1, 1}, Relation::LessEq, 2});
  p.boxes = {{0, 2}, {0, 2}};
  const auto res = ip_solve(p);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(4).epsilon(1e-9));
  CHECK(optimal_point(res) == IntPoint{2, 0});
}

TEST_CASE("ip_solve reports infeasibility") {
  IpProblem p;
  p.objective = {1};
  p.rows.push_back({{1}, Relation::LessEq, -1});
  p.rows.push_back({{-1}, Relation::LessEq, 0});
  p.boxes = {{0, 5}};
  CHECK(ip_solve(p).status == SolveOutcome::Status::Infeasible);
}

TEST_CASE("ip_solve equal-weights scalarization of the cross-constraint box") {
  const auto res = ip_solve(cross_constraint_ip());
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(1).epsilon(1e-9));
  // ties break to the lexicographically smallest solution
  CHECK(optimal_point(res) == IntPoint{0, 1});
}

TEST_CASE("enumeration cap raises with a branch-and-bound hint") {
  IpProblem p;
  p.objective = {1, 1};
  p.boxes = {{0, 4095}, {0, 4095}};
  CHECK_THROWS_AS(enumerate_feasible(p, 1000), CapExceeded);
  CHECK_THROWS_AS(ip_solve(p, 1000), CapExceeded);
}

TEST_CASE("branch and bound matches enumeration on random problems") {
  auto rng = SplitMix64::stream(31, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_ip(rng);
    const auto exact = ip_solve(p);
    const auto bnb = ip_solve_branch_and_bound(p);
    CAPTURE(trial);
    REQUIRE(exact.status == bnb.status);
    if (exact.optimal()) {
      CHECK(bnb.value == doctest::Approx(exact.value).epsilon(1e-9));
      CHECK(optimal_point(bnb) == optimal_point(exact));
    }
  }
}

TEST_CASE("ip_solve equals an argmax re-scan of enumerate_feasible") {
  auto rng = SplitMix64::stream(32, 0, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_ip(rng);
    const auto res = ip_solve(p);
    const auto pts = enumerate_feasible(p);
    CAPTURE(trial);
    if (pts.empty()) {
      CHECK(res.status == SolveOutcome::Status::Infeasible);
      continue;
    }
    REQUIRE(res.optimal());
    Scalar best = -std::numeric_limits<Scalar>::infinity();
    for (const auto& x : pts) {
      Scalar v = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        v += p.objective[j] * static_cast<Scalar>(x[j]);
      }
      best = std::max(best, v);
    }
    CHECK(res.value == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("ip optimum never exceeds the continuous relaxation") {
  auto rng = SplitMix64::stream(33, 0, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_ip(rng);
    const auto ip = ip_solve(p);
    if (!ip.optimal()) continue;
    LpProblem lp;
    lp.objective = p.objective;
    lp.rows = p.rows;
    lp.lower.resize(p.num_vars());
    lp.upper.resize(p.num_vars());
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      lp.lower[j] = static_cast<Scalar>(p.boxes[j].lo);
      lp.upper[j] = static_cast<Scalar>(p.boxes[j].hi);
    }
    const auto rel = lp_solve(lp);
    REQUIRE(rel.optimal());
    CAPTURE(trial);
    CHECK(ip.value <= rel.value + 1e-7);
  }
}

TEST_CASE("conv_hull_lp basics") {
  const std::vector<IntPoint> tri = {{0, 0}, {1, 0}, {0, 1}};
  SUBCASE("hull vertex maximum") {
    const auto res = conv_hull_lp(tri, {1, 1}, {});
    REQUIRE(res.optimal());
    CHECK(res.value == doctest::Approx(1).epsilon(1e-9));
  }
  SUBCASE("single point") {
    const auto res = conv_hull_lp({{2, 3}}, {4, -1}, {});
    REQUIRE(res.optimal());
    CHECK(res.value == doctest::Approx(5).epsilon(1e-9));
    CHECK(res.solution[0] == doctest::Approx(2).epsilon(1e-9));
  }
  SUBCASE("empty point list") {
    CHECK_THROWS_AS(conv_hull_lp({}, {1}, {}), PreconditionError);
  }
}

TEST_CASE("conv_hull_lp over the unit square with a capacity row") {
  // max (x1 + x2)/2 over conv({0,1}^2) with x1 + x2 <= 3/2; the hand oracle
  // pushes to the capacity face: value 3/4.
  const std::vector<IntPoint> square = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<LinRow> extra = {{{1, 1}, Relation::LessEq, 1.5}};
  const auto res = conv_hull_lp(square, {0.5, 0.5}, extra);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(res.solution[0] + res.solution[1] == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("conv_hull_lp with no extra rows equals the best vertex") {
  auto rng = SplitMix64::stream(34, 0, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto count = static_cast<std::size_t>(rng.uniform_int(1, 6));
    std::vector<IntPoint> pts(count, IntPoint(n));
    for (auto& q : pts) {
      for (auto& v : q) v = rng.uniform_int(-3, 3);
    }
    std::vector<Scalar> c(n);
    for (auto& v : c) v = static_cast<Scalar>(rng.uniform_int(-4, 4));
    const auto res = conv_hull_lp(pts, c, {});
    REQUIRE(res.optimal());
    Scalar best = -std::numeric_limits<Scalar>::infinity();
    for (const auto& q : pts) {
      Scalar v = 0;
      for (std::size_t j = 0; j < n; ++j) v += c[j] * static_cast<Scalar>(q[j]);
      best = std::max(best, v);
    }
    CAPTURE(trial);
    CHECK(res.value == doctest::Approx(best).epsilon(1e-7));
  }
}
