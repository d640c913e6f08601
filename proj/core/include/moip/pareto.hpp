#pragma once

// Vector orders, nondominance filters, and the Pareto set-ordering on the
// extended family of antichains (finite antichains plus the two sentinels
// standing for unbounded and infeasible outcomes).

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "moip/common.hpp"

namespace moip {

// Classification of an ordered pair (x, y) under the componentwise orders.
//   StrictlyLess   : x < y  (every component strictly smaller)
//   LessMixed      : x <= y componentwise and x != y, but not x < y
//   Equal          : x == y
//   StrictlyGreater: y < x
//   GreaterMixed   : y <= x componentwise and y != x, but not y < x
//   Incomparable   : none of the above
enum class VecOrder {
  StrictlyLess,
  LessMixed,
  Equal,
  Incomparable,
  StrictlyGreater,
  GreaterMixed,
};

VecOrder vec_leq(const ObjVec& x, const ObjVec& y, Scalar tol = kDomTol);

// x <= y componentwise with x != y ("x is dominated from above by y").
bool dominated_by(const ObjVec& x, const ObjVec& y, Scalar tol = kDomTol);
// x <= y componentwise (equality allowed).
bool leqq(const ObjVec& x, const ObjVec& y, Scalar tol = kDomTol);
bool approx_equal(const ObjVec& x, const ObjVec& y, Scalar tol = kDomTol);

bool is_antichain(const std::vector<ObjVec>& points, Scalar tol = kDomTol);

// An element of the extended family: a finite nonempty antichain stored in
// lexicographic order, or one of the sentinels PlusInf / MinusInf. Under the
// maximization convention an empty set of feasible values maps to MinusInf
// (infeasible) and an unbounded one to PlusInf; minimization swaps the two.
class ExtendedSet {
 public:
  enum class Kind { Finite, PlusInf, MinusInf };

  static ExtendedSet plus_inf() { return ExtendedSet(Kind::PlusInf); }
  static ExtendedSet minus_inf() { return ExtendedSet(Kind::MinusInf); }
  // Canonicalizes (sorts, collapses near-duplicates) and rejects inputs that
  // are empty or not an antichain.
  static ExtendedSet finite(std::vector<ObjVec> points, Scalar tol = kDomTol);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const std::vector<ObjVec>& points() const;
  std::size_t dim() const;

  friend bool operator==(const ExtendedSet& a, const ExtendedSet& b);

 private:
  explicit ExtendedSet(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<ObjVec> points_;
};

bool approx_equal(const ExtendedSet& a, const ExtendedSet& b,
                  Scalar tol = kDomTol);

// Points of `points` nondominated from above; empty input yields MinusInf.
ExtendedSet max_filter(const std::vector<ObjVec>& points, Scalar tol = kDomTol);
// Points nondominated from below; empty input yields PlusInf.
ExtendedSet min_filter(const std::vector<ObjVec>& points, Scalar tol = kDomTol);

// In-place filters on raw point sets (canonical lexicographic output).
std::vector<ObjVec> pareto_max(std::vector<ObjVec> points, Scalar tol = kDomTol);
std::vector<ObjVec> pareto_min(std::vector<ObjVec> points, Scalar tol = kDomTol);

// The Pareto set-ordering on arbitrary nonempty point sets:
//   (i) every s in S has some t in T with s <= t componentwise, and
//  (ii) no t in T is dominated from above by an s in S.
bool preceq_points(const std::vector<ObjVec>& s, const std::vector<ObjVec>& t,
                   Scalar tol = kDomTol);

// Extension to the sentinels: MinusInf precedes everything, everything
// precedes PlusInf, nothing else precedes MinusInf, and PlusInf precedes only
// PlusInf.
bool preceq(const ExtendedSet& s, const ExtendedSet& t, Scalar tol = kDomTol);

// {s + t : s in S, t in T}.
std::vector<ObjVec> minkowski_sum(const std::vector<ObjVec>& s,
                                  const std::vector<ObjVec>& t);

std::ostream& operator<<(std::ostream& os, const ExtendedSet& set);

}  // namespace moip
