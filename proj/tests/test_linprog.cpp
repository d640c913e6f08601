#include "doctest.h"

#include <cmath>

#include "moip/linprog.hpp"
#include "moip/rng.hpp"

using namespace moip;

TEST_CASE("bounded single variable") {
  LpProblem p;
  p.objective = {1};
  p.rows.push_back({{1}, Relation::LessEq, 1});
  const auto res = lp_solve(p);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(1).epsilon(1e-9));
  CHECK(res.solution[0] == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("missing upper row is unbounded") {
  LpProblem p;
  p.objective = {1};
  const auto res = lp_solve(p);
  CHECK(res.status == SolveOutcome::Status::Unbounded);
}

TEST_CASE("crossed rows are infeasible") {
  LpProblem p;
  p.objective = {1};
  p.rows.push_back({{1}, Relation::LessEq, -1});
  CHECK(lp_solve(p).status == SolveOutcome::Status::Infeasible);
}

TEST_CASE("lattice dual LP of the two-unit knapsack") {
  // min f(2) s.t. f(1) >= 2, 2 f(1) - f(2) <= 0, f(0) = 0, f >= 0
  LpProblem p;
  p.direction = Direction::Minimize;
  p.objective = {0, 0, 1};
  p.lower = {0, 0, 0};
  p.upper = {0, std::numeric_limits<Scalar>::infinity(),
             std::numeric_limits<Scalar>::infinity()};
  p.rows.push_back({{0, 1, 0}, Relation::GreaterEq, 2});
  p.rows.push_back({{0, 2, -1}, Relation::LessEq, 0});
  const auto res = lp_solve(p);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(4).epsilon(1e-9));
}

TEST_CASE("equality rows and free variables") {
  // max x - y s.t. x + y = 2, x <= 3, y free
  LpProblem p;
  p.objective = {1, -1};
  p.lower = {0, -std::numeric_limits<Scalar>::infinity()};
  p.upper = {3, std::numeric_limits<Scalar>::infinity()};
  p.rows.push_back({{1, 1}, Relation::Equal, 2});
  const auto res = lp_solve(p);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(4).epsilon(1e-9));
  CHECK(res.solution[0] == doctest::Approx(3).epsilon(1e-9));
  CHECK(res.solution[1] == doctest::Approx(-1).epsilon(1e-9));
}

TEST_CASE("negative rhs handling") {
  // min x s.t. -x <= -2  (x >= 2)
  LpProblem p;
  p.direction = Direction::Minimize;
  p.objective = {1};
  p.rows.push_back({{-1}, Relation::LessEq, -2});
  const auto res = lp_solve(p);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("degenerate pivoting reaches optimality") {
  // Classic cycling-prone data; Bland fallback has to terminate with the
  // right value.
  LpProblem p;
  p.objective = {10, -57, -9, -24};
  p.rows.push_back({{0.5, -5.5, -2.5, 9}, Relation::LessEq, 0});
  p.rows.push_back({{0.5, -1.5, -0.5, 1}, Relation::LessEq, 0});
  p.rows.push_back({{1, 0, 0, 0}, Relation::LessEq, 1});
  const auto res = lp_solve(p);
  REQUIRE(res.optimal());
  CHECK(res.value == doctest::Approx(1).epsilon(1e-7));
}

TEST_CASE("random LPs satisfy their rows and beat interior points") {
  auto rng = SplitMix64::stream(21, 0, 0);
  int solved = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto m = static_cast<std::size_t>(rng.uniform_int(1, 4));
    LpProblem p;
    p.objective.resize(n);
    for (auto& v : p.objective) v = static_cast<Scalar>(rng.uniform_int(-5, 5));
    p.lower.assign(n, 0);
    p.upper.assign(n, static_cast<Scalar>(rng.uniform_int(1, 4)));
    for (std::size_t r = 0; r < m; ++r) {
      LinRow row;
      row.coeffs.resize(n);
      for (auto& v : row.coeffs) v = static_cast<Scalar>(rng.uniform_int(-3, 3));
      row.rhs = static_cast<Scalar>(rng.uniform_int(0, 8));
      row.rel = Relation::LessEq;
      p.rows.push_back(std::move(row));
    }
    const auto res = lp_solve(p);  // bounded box: optimal or infeasible
    REQUIRE(res.status != SolveOutcome::Status::Unbounded);
    if (!res.optimal()) continue;
    ++solved;
    for (const auto& row : p.rows) {
      CHECK(dot(row.coeffs, res.solution) <= row.rhs + 1e-6);
    }
    // no random feasible point does better
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<Scalar> x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = rng.uniform_real() * p.upper[j];
      }
      bool feasible = true;
      for (const auto& row : p.rows) {
        if (dot(row.coeffs, x) > row.rhs) feasible = false;
      }
      if (feasible) CHECK(dot(p.objective, x) <= res.value + 1e-6);
    }
  }
  CHECK(solved > 300);
}
