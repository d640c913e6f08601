#include "moip/bound_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace moip {

namespace {

Scalar norm2(const ObjVec& y) {
  Scalar s = 0;
  for (Scalar v : y) s += v * v;
  return std::sqrt(s);
}

Scalar dist2(const ObjVec& a, const ObjVec& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Scalar d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<ObjVec> local_nadir_lower_bound(const SupportedFrontier& frontier) {
  if (!frontier.feasible || frontier.entries.empty()) {
    throw PreconditionError("lower bound needs at least one supported point");
  }
  std::vector<ObjVec> ys;
  for (const auto& e : frontier.entries) {
    if (e.y.size() != 2) {
      throw PreconditionError("local nadir points are biobjective");
    }
    ys.push_back(e.y);
  }
  std::sort(ys.begin(), ys.end());
  if (ys.size() == 1) return ys;
  std::vector<ObjVec> out;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    out.push_back({std::min(ys[i][0], ys[i + 1][0]),
                   std::min(ys[i][1], ys[i + 1][1])});
  }
  return out;
}

BoundQuality bound_quality(const std::vector<ObjVec>& lower,
                           const std::vector<ObjVec>& upper,
                           GammaSemantics semantics) {
  if (lower.empty() || upper.empty()) {
    throw PreconditionError("bound quality needs nonempty L and U");
  }
  std::vector<ObjVec> pool;
  pool.reserve(lower.size() + upper.size());
  for (const auto& y : lower) pool.push_back(y);
  for (const auto& y : upper) pool.push_back(y);
  if (semantics == GammaSemantics::SetUnion) {
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end(),
                           [](const ObjVec& a, const ObjVec& b) {
                             return approx_equal(a, b);
                           }),
               pool.end());
  }
  Scalar gamma = 0;
  for (const auto& y : pool) gamma += norm2(y);
  gamma /= static_cast<Scalar>(pool.size());
  if (gamma <= kDomTol) {
    throw PreconditionError("degenerate scale: all bound points at the origin");
  }
  Scalar worst = 0;
  for (const auto& l : lower) {
    Scalar nearest = std::numeric_limits<Scalar>::infinity();
    for (const auto& u : upper) nearest = std::min(nearest, dist2(u, l));
    worst = std::max(worst, nearest);
  }
  return BoundQuality{worst / gamma, gamma};
}

bool is_strong_upper_bound(const std::vector<ObjVec>& upper,
                           const ExtendedSet& nondominated, Scalar tol) {
  if (!nondominated.is_finite()) {
    throw PreconditionError("strength test needs a finite nondominated set");
  }
  for (const auto& y : nondominated.points()) {
    bool present = false;
    for (const auto& u : upper) {
      if (approx_equal(y, u, tol)) {
        present = true;
        break;
      }
    }
    if (!present) return false;
  }
  return true;
}

bool halfspace_union_check(const ObjVec& z,
                           const std::vector<ObjVec>& feasible_values,
                           Scalar tol) {
  for (const auto& y : feasible_values) {
    if (y.size() != z.size()) {
      throw PreconditionError("halfspace check dimension mismatch");
    }
    bool covered = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] >= y[i] - tol) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<ObjVec> discretize_chain(const FrontierChain& chain,
                                     Scalar spacing) {
  if (!chain.finite() || chain.extreme_points.empty()) {
    throw PreconditionError("cannot discretize a non-finite chain");
  }
  if (!(spacing > 0)) throw PreconditionError("spacing must be positive");
  std::vector<ObjVec> out = chain.extreme_points;
  for (std::size_t i = 0; i + 1 < chain.extreme_points.size(); ++i) {
    const auto& a = chain.extreme_points[i];
    const auto& b = chain.extreme_points[i + 1];
    const Scalar len = dist2(a, b);
    const auto steps = static_cast<std::size_t>(std::floor(len / spacing));
    for (std::size_t s = 1; s <= steps; ++s) {
      const Scalar t = static_cast<Scalar>(s) * spacing / len;
      if (t >= 1) break;
      out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace moip
