#pragma once

// Lower bound sets from local nadir points, the scaled bound-quality metric,
// and strength / sanity diagnostics for upper bound sets.

#include <vector>

#include "moip/relaxations.hpp"

namespace moip {

// Componentwise minima of adjacent supported points, sorted by first
// objective (k = 2). A single supported point is its own lower bound.
std::vector<ObjVec> local_nadir_lower_bound(const SupportedFrontier& frontier);

// The paper's set notation is read literally: exact duplicates across L and U
// count once. Multiset keeps one norm term per occurrence instead.
enum class GammaSemantics { SetUnion, Multiset };

struct BoundQuality {
  Scalar d = 0;
  Scalar gamma = 0;
};

// d(L,U) = (1/gamma) max over l in L of min over u in U of ||u - l||_2,
// gamma = the average of ||y||_2 for y in L union U.
BoundQuality bound_quality(const std::vector<ObjVec>& lower,
                           const std::vector<ObjVec>& upper,
                           GammaSemantics semantics = GammaSemantics::SetUnion);

// Max(Y) is contained in U (within tol).
bool is_strong_upper_bound(const std::vector<ObjVec>& upper,
                           const ExtendedSet& nondominated,
                           Scalar tol = kDomTol);

// Every feasible value y has some coordinate i with z_i >= y_i: membership
// in the half-space-union superset of the closure of the dual feasible set.
bool halfspace_union_check(const ObjVec& z,
                           const std::vector<ObjVec>& feasible_values,
                           Scalar tol = kDomTol);

// Extreme points plus equally spaced samples along each segment at the given
// spacing; used to compare a frontier chain against point sets.
std::vector<ObjVec> discretize_chain(const FrontierChain& chain, Scalar spacing);

// Fraction of the scale gamma used as the chain sample spacing.
inline constexpr Scalar kChainSampleFraction = 0.05;

struct BoundReport {
  enum class Method { Lagrangian, ConvexHull };
  Method method = Method::Lagrangian;
  std::vector<ObjVec> lower;
  std::vector<ObjVec> upper;  // discretized when the bound is a chain
  Scalar d = 0;
  Scalar gamma = 0;
  bool strong = false;
  // 0 when the upper bound was a point set; otherwise the sample spacing the
  // chain was discretized with for the metric.
  Scalar chain_sample_spacing = 0;
};

}  // namespace moip
