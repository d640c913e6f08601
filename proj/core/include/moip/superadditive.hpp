#pragma once

// Value-function sampling, the vector-valued superadditive dual solved
// through its lattice LP reformulation, and the finite hyperplane-family
// representation of the set-valued dual.

#include <iosfwd>
#include <vector>

#include "moip/frontier.hpp"

namespace moip {

inline constexpr std::size_t kLatticeCap = 100000;

// {w : weight'w = value} with weight strictly positive.
struct Hyperplane {
  ObjVec weight;  // normalized to sum 1
  Scalar value;
};

struct HyperplaneFamily {
  std::vector<Hyperplane> entries;  // deduplicated
};

// The lattice LP behind the vector-valued dual, for instances whose
// constraint data are nonnegative integers. One variable f_i(d) per
// objective i and lattice point 0 <= d <= b; columns whose A_j exceeds b
// componentwise are dropped (such x_j is zero in every feasible solution).
struct SdmolpProgram {
  std::size_t num_objectives = 0;
  std::vector<IntPoint> lattice;  // lexicographic; lattice[0] = 0
  IntPoint rhs;
  std::size_t rhs_index = 0;
  struct ColumnBound {
    std::size_t column;         // original column j
    std::size_t lattice_index;  // A_j
    std::vector<Scalar> c;      // c_{i j} per objective: f_i(A_j) >= c[i]
  };
  std::vector<ColumnBound> column_bounds;
  // Nontrivial superadditivity triples (i1, i2, isum): both parts nonzero,
  // f_i(d1) + f_i(d2) - f_i(d1+d2) <= 0. Pairs with a zero part reduce to
  // f_i(0) = 0 and are omitted.
  struct SuperaddPair {
    std::size_t first, second, sum;
  };
  std::vector<SuperaddPair> superadd_pairs;
  std::vector<std::size_t> dropped_columns;
};

SdmolpProgram build_sdmolp(const MoipInstance& inst,
                           std::size_t lattice_cap = kLatticeCap);

// Text export in LP interchange format. Variables are named f_<i>_<d...>
// with 1-based objective index and underscore-joined lattice coordinates;
// the objective line is the equal-weights scalarization, which recovers the
// unique nondominated point of the separable program.
void write_lp_format(const SdmolpProgram& program, std::ostream& os);

// Per-objective optimal values (f_1(b), ..., f_k(b)) of the lattice LP: the
// unique nondominated point of the vector-valued dual, which coincides with
// the ideal point of the instance.
ObjVec vsdp_solve(const SdmolpProgram& program);
ObjVec vsdp_solve(const MoipInstance& inst,
                  std::size_t lattice_cap = kLatticeCap);

// Nondominated set of the instance at each right-hand side.
std::vector<std::pair<std::vector<Scalar>, ExtendedSet>> value_function_sample(
    const MoipInstance& inst, const std::vector<std::vector<Scalar>>& betas,
    std::uint64_t cap = kEnumCap);

// One hyperplane per dichotomic supporting weight: weight mu and the optimal
// value of the mu-scalarized integer program. k = 1 yields the single entry
// (1, optimum).
HyperplaneFamily scalar_dual_family(const MoipInstance& inst,
                                    std::uint64_t cap = kEnumCap);

// Membership of z in the Min of the union of the family's hyperplanes.
// For a hyperplane {w : mu'w = f} with mu > 0, a point w <= z, w != z exists
// on it iff mu'z > f; hence z belongs to the Min of the union iff z lies on
// some hyperplane and mu_j'z <= f_j for all j.
bool fstar_contains(const ObjVec& z, const HyperplaneFamily& family,
                    Scalar tol = kDomTol);

// Whether the constructed family contains Cx* for every supported efficient
// solution x*.
bool verify_strong_sdp(const MoipInstance& inst, std::uint64_t cap = kEnumCap);

}  // namespace moip
