#include "doctest.h"

#include "moip/frontier.hpp"
#include "testutil.hpp"

using namespace moip;
using namespace testutil;

TEST_CASE("nondominated sets of the worked instances") {
  CHECK(finite_equals(nondominated_set(instance_knapsack2()),
                      {{4, 2}, {3, 3}, {2, 4}}));
  CHECK(finite_equals(nondominated_set(instance_unit_capacity()),
                      {{1, -0.5}, {0, 0}, {-0.5, 1}}));
  CHECK(nondominated_set(instance_infeasible()).kind() ==
        ExtendedSet::Kind::MinusInf);
}

TEST_CASE("scalarize builds the weighted-sum program") {
  SUBCASE("unit capacity, equal weights") {
    const auto p = scalarize(instance_unit_capacity(), {1, 1});
    CHECK(p.objective == std::vector<Scalar>{0.5, 0.5});
    CHECK(p.rows.size() == 1);
  }
  SUBCASE("diagonal objective") {
    MoipInstance inst;
    inst.C = {{1, 0}, {0, 1}};
    inst.A = {{1, 1}};
    inst.b = {2};
    inst.boxes = {{0, 1}, {0, 1}};
    CHECK(scalarize(inst, {2, 1}).objective == std::vector<Scalar>{2, 1});
    CHECK(scalarize(instance_cross_constraints(), {1, 2}).objective ==
          std::vector<Scalar>{1, 2});
  }
  SUBCASE("nonpositive weight rejected") {
    CHECK_THROWS_AS(scalarize(instance_unit_capacity(), {1, 0}),
                    PreconditionError);
    CHECK_THROWS_AS(scalarize(instance_unit_capacity(), {1, -1}),
                    PreconditionError);
  }
}

TEST_CASE("supported frontiers of the worked instances") {
  SUBCASE("cross constraints") {
    const auto f = supported_frontier(instance_cross_constraints());
    REQUIRE(f.feasible);
    std::vector<ObjVec> ys;
    for (const auto& e : f.entries) ys.push_back(e.y);
    CHECK(same_point_set(ys, {{1, 0}, {0, 1}}));
  }
  SUBCASE("two-unit knapsack keeps the interior segment point") {
    const auto f = supported_frontier(instance_knapsack2());
    REQUIRE(f.feasible);
    std::vector<ObjVec> ys;
    for (const auto& e : f.entries) ys.push_back(e.y);
    CHECK(same_point_set(ys, {{4, 2}, {3, 3}, {2, 4}}));
  }
  SUBCASE("unit capacity excludes the unsupported origin") {
    const auto f = supported_frontier(instance_unit_capacity());
    REQUIRE(f.feasible);
    std::vector<ObjVec> ys;
    for (const auto& e : f.entries) ys.push_back(e.y);
    CHECK(same_point_set(ys, {{1, -0.5}, {-0.5, 1}}));
  }
  SUBCASE("infeasible instance is flagged") {
    MoipInstance inst = instance_unit_capacity();
    inst.b = {-1};
    const auto f = supported_frontier(inst);
    CHECK_FALSE(f.feasible);
    CHECK(f.entries.empty());
  }
  SUBCASE("k != 2 rejected") {
    MoipInstance inst;
    inst.C = {{1}};
    inst.A = {{1}};
    inst.b = {1};
    inst.boxes = {{0, 1}};
    CHECK_THROWS_AS(supported_frontier(inst), PreconditionError);
  }
}

TEST_CASE("frontier entries re-verify through their scalarizations") {
  auto rng = SplitMix64::stream(41, 0, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_instance(rng);
    const auto f = supported_frontier(inst);
    if (!f.feasible) continue;
    const auto nd = nondominated_set(inst);
    REQUIRE(nd.is_finite());
    for (const auto& e : f.entries) {
      CAPTURE(trial);
      // weight positivity and normalization
      Scalar sum = 0;
      for (Scalar w : e.weight) {
        CHECK(w > 0);
        sum += w;
      }
      CHECK(sum == doctest::Approx(1).epsilon(1e-9));
      // supported point is nondominated
      bool in_nd = false;
      for (const auto& y : nd.points()) {
        if (approx_equal(y, e.y)) in_nd = true;
      }
      CHECK(in_nd);
      // x attains the scalarized optimum with its own weight
      const auto res = ip_solve(scalarize(inst, e.weight));
      REQUIRE(res.optimal());
      CHECK(res.value == doctest::Approx(dot(e.weight, e.y)).epsilon(1e-9));
    }
  }
}

TEST_CASE("is_supported on the worked instances") {
  const auto unit = instance_unit_capacity();
  CHECK(is_supported(unit, {1, 0}));
  CHECK(is_supported(unit, {0, 1}));
  CHECK_FALSE(is_supported(unit, {0, 0}));
  CHECK_THROWS_AS(is_supported(unit, {1, 1}), PreconditionError);  // infeasible x

  // single-objective instances support their argmax
  MoipInstance inst;
  inst.C = {{3}};
  inst.A = {{1}};
  inst.b = {2};
  inst.boxes = {{0, 5}};
  CHECK(is_supported(inst, {2}));
}

TEST_CASE("is_supported cross-checks the frontier on random instances") {
  auto rng = SplitMix64::stream(42, 0, 0);
  int feasible_trials = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    const auto xs = enumerate_x(inst);
    if (xs.empty()) continue;
    ++feasible_trials;
    const auto f = supported_frontier(inst);
    std::vector<ObjVec> frontier_ys;
    for (const auto& e : f.entries) frontier_ys.push_back(e.y);
    for (const auto& x : xs) {
      const ObjVec y = inst.objective_value(x);
      bool on_frontier = false;
      for (const auto& fy : frontier_ys) {
        if (approx_equal(fy, y)) on_frontier = true;
      }
      CAPTURE(trial);
      CHECK(is_supported(inst, x) == on_frontier);
    }
  }
  CHECK(feasible_trials > 100);
}

TEST_CASE("ideal and nadir points") {
  CHECK(ideal_point(instance_knapsack2()) == ObjVec{4, 4});
  CHECK(nadir_point(instance_knapsack2()) == ObjVec{2, 2});
  CHECK(ideal_point(instance_unit_capacity()) == ObjVec{1, 1});
  CHECK_THROWS_AS(ideal_point(instance_infeasible()), PreconditionError);
}

TEST_CASE("nadir <= nondominated <= ideal on random instances") {
  auto rng = SplitMix64::stream(43, 0, 0);
  RandomInstanceOptions opt;
  opt.max_vars = 8;
  opt.box_hi = 2;
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_instance(rng, opt);
    const auto nd = nondominated_set(inst);
    if (!nd.is_finite()) continue;
    const auto ideal = ideal_point(inst);
    const auto nadir = nadir_point(inst);
    for (const auto& y : nd.points()) {
      CAPTURE(trial);
      CHECK(leqq(nadir, y));
      CHECK(leqq(y, ideal));
    }
  }
}
