#include "moip/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace moip {

std::string format_scalar(Scalar x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

void require_same_dim(const ObjVec& x, const ObjVec& y) {
  if (x.size() != y.size() || x.empty()) {
    throw PreconditionError("objective vectors must share dimension k >= 1");
  }
}

}  // namespace

VecOrder vec_leq(const ObjVec& x, const ObjVec& y, Scalar tol) {
  require_same_dim(x, y);
  bool all_le = true, all_ge = true, any_lt = false, any_gt = false;
  bool all_lt = true, all_gt = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar d = y[i] - x[i];
    if (d > tol) {
      any_lt = true;
      all_ge = false;
      all_gt = false;
    } else if (d < -tol) {
      any_gt = true;
      all_le = false;
      all_lt = false;
    } else {
      all_lt = false;
      all_gt = false;
    }
  }
  if (!any_lt && !any_gt) return VecOrder::Equal;
  if (all_lt) return VecOrder::StrictlyLess;
  if (all_le) return VecOrder::LessMixed;
  if (all_gt) return VecOrder::StrictlyGreater;
  if (all_ge) return VecOrder::GreaterMixed;
  return VecOrder::Incomparable;
}

bool leqq(const ObjVec& x, const ObjVec& y, Scalar tol) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] - x[i] < -tol) return false;
  }
  return true;
}

bool approx_equal(const ObjVec& x, const ObjVec& y, Scalar tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::fabs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

bool dominated_by(const ObjVec& x, const ObjVec& y, Scalar tol) {
  require_same_dim(x, y);
  bool strict = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar d = y[i] - x[i];
    if (d < -tol) return false;
    if (d > tol) strict = true;
  }
  return strict;
}

bool is_antichain(const std::vector<ObjVec>& points, Scalar tol) {
  if (points.empty()) {
    throw PreconditionError("is_antichain expects a nonempty set");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (dominated_by(points[i], points[j], tol) ||
          dominated_by(points[j], points[i], tol)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool lex_less(const ObjVec& a, const ObjVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sort lexicographically and collapse points equal within tol.
std::vector<ObjVec> canonicalize(std::vector<ObjVec> points, Scalar tol) {
  std::sort(points.begin(), points.end(), lex_less);
  std::vector<ObjVec> out;
  out.reserve(points.size());
  for (auto& p : points) {
    bool dup = false;
    for (const auto& q : out) {
      if (approx_equal(p, q, tol)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

template <bool FromAbove>
std::vector<ObjVec> filter_impl(std::vector<ObjVec> points, Scalar tol) {
  points = canonicalize(std::move(points), tol);
  std::vector<ObjVec> kept;
  kept.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = FromAbove ? dominated_by(points[i], points[j], tol)
                            : dominated_by(points[j], points[i], tol);
    }
    if (!dominated) kept.push_back(points[i]);
  }
  return kept;
}

}  // namespace

std::vector<ObjVec> pareto_max(std::vector<ObjVec> points, Scalar tol) {
  return filter_impl<true>(std::move(points), tol);
}

std::vector<ObjVec> pareto_min(std::vector<ObjVec> points, Scalar tol) {
  return filter_impl<false>(std::move(points), tol);
}

ExtendedSet ExtendedSet::finite(std::vector<ObjVec> points, Scalar tol) {
  points = canonicalize(std::move(points), tol);
  if (points.empty()) {
    throw PreconditionError("finite extended set must be nonempty");
  }
  const std::size_t k = points.front().size();
  for (const auto& p : points) {
    if (p.size() != k || k == 0) {
      throw PreconditionError("extended set points must share dimension");
    }
  }
  if (!is_antichain(points, tol)) {
    throw PreconditionError("finite extended set must be an antichain");
  }
  ExtendedSet s(Kind::Finite);
  s.points_ = std::move(points);
  return s;
}

const std::vector<ObjVec>& ExtendedSet::points() const {
  if (!is_finite()) {
    throw PreconditionError("points() called on a non-finite extended set");
  }
  return points_;
}

std::size_t ExtendedSet::dim() const {
  return is_finite() ? points_.front().size() : 0;
}

bool operator==(const ExtendedSet& a, const ExtendedSet& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedSet::Kind::Finite || a.points_ == b.points_;
}

bool approx_equal(const ExtendedSet& a, const ExtendedSet& b, Scalar tol) {
  if (a.kind() != b.kind()) return false;
  if (!a.is_finite()) return true;
  const auto& pa = a.points();
  const auto& pb = b.points();
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!approx_equal(pa[i], pb[i], tol)) return false;
  }
  return true;
}

ExtendedSet max_filter(const std::vector<ObjVec>& points, Scalar tol) {
  if (points.empty()) return ExtendedSet::minus_inf();
  return ExtendedSet::finite(pareto_max(points, tol), tol);
}

ExtendedSet min_filter(const std::vector<ObjVec>& points, Scalar tol) {
  if (points.empty()) return ExtendedSet::plus_inf();
  return ExtendedSet::finite(pareto_min(points, tol), tol);
}

bool preceq_points(const std::vector<ObjVec>& s, const std::vector<ObjVec>& t,
                   Scalar tol) {
  if (s.empty() || t.empty()) {
    throw PreconditionError("set-ordering is defined on nonempty sets");
  }
  for (const auto& sp : s) {
    bool covered = false;
    for (const auto& tp : t) {
      if (leqq(sp, tp, tol)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  for (const auto& sp : s) {
    for (const auto& tp : t) {
      if (dominated_by(tp, sp, tol)) return false;
    }
  }
  return true;
}

bool preceq(const ExtendedSet& s, const ExtendedSet& t, Scalar tol) {
  using Kind = ExtendedSet::Kind;
  if (s.kind() == Kind::MinusInf) return true;
  if (t.kind() == Kind::PlusInf) return true;
  if (t.kind() == Kind::MinusInf) return false;
  if (s.kind() == Kind::PlusInf) return false;
  if (s.dim() != t.dim()) {
    throw PreconditionError("set-ordering operands must share dimension");
  }
  return preceq_points(s.points(), t.points(), tol);
}

std::vector<ObjVec> minkowski_sum(const std::vector<ObjVec>& s,
                                  const std::vector<ObjVec>& t) {
  std::vector<ObjVec> out;
  out.reserve(s.size() * t.size());
  for (const auto& a : s) {
    for (const auto& b : t) {
      require_same_dim(a, b);
      ObjVec c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExtendedSet& set) {
  switch (set.kind()) {
    case ExtendedSet::Kind::PlusInf:
      return os << "+Minf";
    case ExtendedSet::Kind::MinusInf:
      return os << "-Minf";
    case ExtendedSet::Kind::Finite: {
      os << "{";
      bool first_point = true;
      for (const auto& p : set.points()) {
        if (!first_point) os << ", ";
        first_point = false;
        os << "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (i) os << ", ";
          os << format_scalar(p[i]);
        }
        os << ")";
      }
      return os << "}";
    }
  }
  return os;
}

}  // namespace moip
