#include "doctest.h"

#include "moip/pareto.hpp"
#include "moip/rng.hpp"
#include "testutil.hpp"

using namespace moip;
using testutil::finite_equals;
using testutil::oracle_pareto_max;
using testutil::same_point_set;

TEST_CASE("vec_leq classifies the componentwise relations") {
  CHECK(vec_leq({0, 0}, {1, 1}) == VecOrder::StrictlyLess);
  CHECK(vec_leq({0, 0}, {0, 1}) == VecOrder::LessMixed);
  CHECK(vec_leq({-1, 1}, {1, -1}) == VecOrder::Incomparable);
  CHECK(vec_leq({2, 2}, {2, 2}) == VecOrder::Equal);
  CHECK(vec_leq({1, 1}, {0, 0}) == VecOrder::StrictlyGreater);
  CHECK(vec_leq({0, 1}, {0, 0}) == VecOrder::GreaterMixed);
  CHECK_THROWS_AS(vec_leq({0, 0}, {0}), PreconditionError);
}

TEST_CASE("max_filter on the worked sets") {
  CHECK(finite_equals(max_filter({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), {{1, 1}}));
  CHECK(max_filter({}).kind() == ExtendedSet::Kind::MinusInf);
  CHECK(min_filter({}).kind() == ExtendedSet::Kind::PlusInf);
  // frozen from the pairwise-domination oracle
  const std::vector<ObjVec> pts = {{1, -0.5}, {0, 0}, {-0.5, 1}, {0.5, 0.5}};
  CHECK(oracle_pareto_max(pts) ==
        std::vector<ObjVec>{{-0.5, 1}, {0.5, 0.5}, {1, -0.5}});
  CHECK(finite_equals(max_filter(pts), {{1, -0.5}, {-0.5, 1}, {0.5, 0.5}}));
}

TEST_CASE("max_filter agrees with the brute-force oracle on random sets") {
  auto rng = SplitMix64::stream(11, 0, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto count = static_cast<std::size_t>(rng.uniform_int(1, 12));
    std::vector<ObjVec> pts(count, ObjVec(k));
    for (auto& p : pts) {
      for (auto& v : p) v = static_cast<Scalar>(rng.uniform_int(-3, 3)) / 2;
    }
    const auto expected = oracle_pareto_max(pts);
    CAPTURE(trial);
    CHECK(same_point_set(max_filter(pts).points(), expected));
  }
}

TEST_CASE("max_filter output is an antichain and idempotent") {
  auto rng = SplitMix64::stream(12, 0, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto count = static_cast<std::size_t>(rng.uniform_int(1, 10));
    std::vector<ObjVec> pts(count, ObjVec(2));
    for (auto& p : pts) {
      for (auto& v : p) v = static_cast<Scalar>(rng.uniform_int(-4, 4));
    }
    const ExtendedSet first = max_filter(pts);
    REQUIRE(first.is_finite());
    CHECK(is_antichain(first.points()));
    CHECK(max_filter(first.points()) == first);
  }
}

TEST_CASE("preceq on the worked sets") {
  const auto s = ExtendedSet::finite({{0, 0}});
  // S preceq T but S npreceq Min(T)
  CHECK(preceq_points({{0, 0}}, {{-1, 1}, {2, 2}, {1, -1}}));
  CHECK_FALSE(preceq(s, ExtendedSet::finite({{-1, 1}, {1, -1}})));
  CHECK(preceq(ExtendedSet::minus_inf(), s));
  CHECK(preceq(ExtendedSet::minus_inf(), ExtendedSet::minus_inf()));
  CHECK(preceq(s, ExtendedSet::plus_inf()));
  CHECK(preceq(ExtendedSet::plus_inf(), ExtendedSet::plus_inf()));
  CHECK_FALSE(preceq(s, ExtendedSet::minus_inf()));
  CHECK_FALSE(preceq(ExtendedSet::plus_inf(), s));
}

TEST_CASE("is_antichain") {
  CHECK(is_antichain({{1, -0.5}, {0, 0}, {-0.5, 1}}));
  CHECK_FALSE(is_antichain({{0, 0}, {1, 1}}));
  CHECK(is_antichain({{3, 7}}));
  CHECK_THROWS_AS(is_antichain({}), PreconditionError);
}

TEST_CASE("extended set canonicalization and equality") {
  const auto a = ExtendedSet::finite({{1, 0}, {0, 1}});
  const auto b = ExtendedSet::finite({{0, 1}, {1, 0}, {0, 1 + 1e-12}});
  CHECK(a == b);
  CHECK(a.points().front() == ObjVec{0, 1});  // lexicographic order
  CHECK_THROWS_AS(ExtendedSet::finite({}), PreconditionError);
  CHECK_THROWS_AS(ExtendedSet::finite({{0, 0}, {1, 1}}), PreconditionError);
}

namespace {

std::vector<ObjVec> random_antichain(SplitMix64& rng, std::size_t k) {
  const auto count = static_cast<std::size_t>(rng.uniform_int(1, 6));
  std::vector<ObjVec> pts(count, ObjVec(k));
  for (auto& p : pts) {
    for (auto& v : p) v = static_cast<Scalar>(rng.uniform_int(-6, 6)) / 2;
  }
  return pareto_max(pts);
}

}  // namespace

TEST_CASE("the set-ordering is a partial order on antichains") {
  // reflexive / antisymmetric / transitive over random triples, k in {1,2,3}
  for (std::size_t k = 1; k <= 3; ++k) {
    auto rng = SplitMix64::stream(13, k, 0);
    int checked = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      const auto s = ExtendedSet::finite(random_antichain(rng, k));
      const auto t = ExtendedSet::finite(random_antichain(rng, k));
      const auto u = ExtendedSet::finite(random_antichain(rng, k));
      CAPTURE(k);
      CAPTURE(trial);
      CHECK(preceq(s, s));
      if (preceq(s, t) && preceq(t, s)) CHECK(approx_equal(s, t));
      if (preceq(s, t) && preceq(t, u)) {
        ++checked;
        CHECK(preceq(s, u));
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("subsets and maxima preserve the order") {
  auto rng = SplitMix64::stream(14, 0, 0);
  int subset_checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto u = random_antichain(rng, k);
    // random (not necessarily antichain) S with S preceq U
    const auto count = static_cast<std::size_t>(rng.uniform_int(1, 6));
    std::vector<ObjVec> s(count, ObjVec(k));
    for (auto& p : s) {
      for (auto& v : p) v = static_cast<Scalar>(rng.uniform_int(-6, 6)) / 2;
    }
    if (!preceq_points(s, u)) continue;
    ++subset_checked;
    // every nonempty subset T of S satisfies T preceq U
    for (std::size_t mask = 1; mask < (std::size_t{1} << s.size()); ++mask) {
      std::vector<ObjVec> t;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (std::size_t{1} << i)) t.push_back(s[i]);
      }
      CHECK(preceq_points(t, u));
    }
    CHECK(preceq_points(pareto_max(s), u));
  }
  CHECK(subset_checked > 100);
}

TEST_CASE("k = 1 degenerates to the scalar order") {
  auto rng = SplitMix64::stream(15, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = static_cast<Scalar>(rng.uniform_int(-10, 10)) / 2;
    const Scalar b = static_cast<Scalar>(rng.uniform_int(-10, 10)) / 2;
    CHECK(preceq(ExtendedSet::finite({{a}}), ExtendedSet::finite({{b}})) ==
          (a <= b + kDomTol));
  }
}

TEST_CASE("minkowski sum") {
  CHECK(same_point_set(minkowski_sum({{1, 0}, {0, 1}}, {{1, 1}}),
                       {{2, 1}, {1, 2}}));
}
