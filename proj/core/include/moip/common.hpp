#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace moip {

using Scalar = double;

// A point in objective space R^k.
using ObjVec = std::vector<Scalar>;

// Absolute tolerance for equality / domination comparisons between objective
// values. All worked-example data are dyadic rationals, so computed values
// land well within this band of the exact ones.
inline constexpr Scalar kDomTol = 1e-9;

// Constraint-feasibility tolerance for solver outputs.
inline constexpr Scalar kFeasTol = 1e-7;

// Optimality (reduced-cost) tolerance for the simplex method.
inline constexpr Scalar kOptTol = 1e-9;

// Default cap on the number of integer box points an enumerative routine may
// visit before refusing.
inline constexpr std::uint64_t kEnumCap = std::uint64_t{1} << 24;

// Violated preconditions: bad input shape, out-of-range parameters. Maps to
// CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or lattice cap was exceeded.
class CapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Numerical failure inside a solver (e.g. cycling guard tripped). Never a
// silently wrong status. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal string that parses back to exactly the same double.
std::string format_scalar(Scalar x);

}  // namespace moip
