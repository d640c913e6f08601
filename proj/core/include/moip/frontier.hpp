#pragma once

// Nondominated-set enumeration, weighted-sum scalarization, and the
// dichotomic supported-frontier search for biobjective instances.

#include <vector>

#include "moip/instance.hpp"

namespace moip {

// Skew applied in place of 0 for the extreme dichotomic weights; keeps
// every scalarizing vector strictly positive.
inline constexpr Scalar kExtremeWeightSkew = 1e-4;
// Lower bound per weight component in supported-ness certificates.
inline constexpr Scalar kWeightFloor = 1e-6;

struct FrontierEntry {
  IntPoint x;     // an efficient solution
  ObjVec y;       // Cx
  ObjVec weight;  // strictly positive supporting weight, sum normalized to 1
};

struct SupportedFrontier {
  std::vector<FrontierEntry> entries;  // sorted by first objective ascending
  bool feasible = true;
};

// Max of {Cx : x feasible}; MinusInf when infeasible.
ExtendedSet nondominated_set(const MoipInstance& inst,
                             std::uint64_t cap = kEnumCap);

// Single-objective IP with objective mu'C; mu must be strictly positive.
IpProblem scalarize(const MoipInstance& inst, const ObjVec& mu);

// All supported nondominated points with supporting weights (k = 2 only).
// Ties of a segment weight are collected exhaustively over the enumerated
// feasible set so interior-segment supported points are not missed.
SupportedFrontier supported_frontier(const MoipInstance& inst,
                                     std::uint64_t cap = kEnumCap);

// Whether some strictly positive weight makes x optimal among all feasible
// objective values; decided by LP feasibility over the enumerated values
// with the weight normalized to sum 1 and floored at kWeightFloor.
bool is_supported(const MoipInstance& inst, const IntPoint& x,
                  std::uint64_t cap = kEnumCap);

ObjVec ideal_point(const MoipInstance& inst, std::uint64_t cap = kEnumCap);
ObjVec nadir_point(const MoipInstance& inst, std::uint64_t cap = kEnumCap);

}  // namespace moip
