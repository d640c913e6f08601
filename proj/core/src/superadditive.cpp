#include "moip/superadditive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

namespace moip {

namespace {

long long as_nonneg_integer(Scalar v, const char* what) {
  const Scalar r = std::round(v);
  if (std::fabs(v - r) > kDomTol || r < 0) {
    throw PreconditionError(std::string(what) +
                            " must be nonnegative integers for the lattice dual");
  }
  return static_cast<long long>(r);
}

}  // namespace

SdmolpProgram build_sdmolp(const MoipInstance& inst, std::size_t lattice_cap) {
  inst.validate();
  const std::size_t m = inst.num_rows();
  const std::size_t n = inst.num_vars();
  if (m == 0) throw PreconditionError("lattice dual needs at least one row");

  SdmolpProgram prog;
  prog.num_objectives = inst.num_objectives();
  prog.rhs.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    prog.rhs[r] = as_nonneg_integer(inst.b[r], "rhs entries");
  }
  std::vector<std::vector<long long>> ai(m, std::vector<long long>(n));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      ai[r][j] = as_nonneg_integer(inst.A[r][j], "constraint entries");
    }
  }

  std::uint64_t lattice_size = 1;
  for (long long br : prog.rhs) {
    const auto w = static_cast<std::uint64_t>(br) + 1;
    if (lattice_size > lattice_cap / w + 1) {
      throw CapExceeded("superadditive lattice exceeds the configured cap");
    }
    lattice_size *= w;
  }
  if (lattice_size > lattice_cap) {
    throw CapExceeded("superadditive lattice exceeds the configured cap");
  }

  // Mixed-radix strides so lattice index arithmetic avoids searches.
  std::vector<std::uint64_t> stride(m, 1);
  for (std::size_t r = m; r-- > 1;) {
    stride[r - 1] = stride[r] * (static_cast<std::uint64_t>(prog.rhs[r]) + 1);
  }
  const auto index_of = [&](const IntPoint& d) {
    std::uint64_t idx = 0;
    for (std::size_t r = 0; r < m; ++r) {
      idx += stride[r] * static_cast<std::uint64_t>(d[r]);
    }
    return static_cast<std::size_t>(idx);
  };

  prog.lattice.reserve(lattice_size);
  IntPoint d(m, 0);
  for (;;) {
    prog.lattice.push_back(d);
    std::size_t r = m;
    bool done = true;
    while (r > 0) {
      --r;
      if (d[r] < prog.rhs[r]) {
        ++d[r];
        for (std::size_t t = r + 1; t < m; ++t) d[t] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  prog.rhs_index = index_of(prog.rhs);

  for (std::size_t j = 0; j < n; ++j) {
    IntPoint col(m);
    bool inside = true;
    for (std::size_t r = 0; r < m; ++r) {
      col[r] = ai[r][j];
      if (col[r] > prog.rhs[r]) inside = false;
    }
    if (!inside) {
      // A_j exceeds b in some row, so x_j = 0 in every feasible solution and
      // the column places no constraint on the lattice variables.
      prog.dropped_columns.push_back(j);
      continue;
    }
    SdmolpProgram::ColumnBound cb;
    cb.column = j;
    cb.lattice_index = index_of(col);
    cb.c.resize(prog.num_objectives);
    for (std::size_t i = 0; i < prog.num_objectives; ++i) {
      cb.c[i] = inst.C[i][j];
    }
    prog.column_bounds.push_back(std::move(cb));
  }

  for (std::size_t i1 = 1; i1 < prog.lattice.size(); ++i1) {
    const IntPoint& d1 = prog.lattice[i1];
    IntPoint rem(m);
    for (std::size_t r = 0; r < m; ++r) rem[r] = prog.rhs[r] - d1[r];
    // walk d2 over [0, b - d1]
    IntPoint d2(m, 0);
    for (;;) {
      const std::size_t i2 = index_of(d2);
      if (i2 >= i1) {  // unordered pairs once, both parts nonzero
        bool nonzero = false;
        for (long long v : d2) nonzero = nonzero || v != 0;
        if (nonzero) {
          IntPoint sum(m);
          for (std::size_t r = 0; r < m; ++r) sum[r] = d1[r] + d2[r];
          prog.superadd_pairs.push_back({i1, i2, index_of(sum)});
        }
      }
      std::size_t r = m;
      bool done = true;
      while (r > 0) {
        --r;
        if (d2[r] < rem[r]) {
          ++d2[r];
          for (std::size_t t = r + 1; t < m; ++t) d2[t] = 0;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  return prog;
}

namespace {

std::string lattice_var_name(std::size_t objective, const IntPoint& d) {
  std::string name = "f_" + std::to_string(objective + 1);
  for (long long v : d) name += "_" + std::to_string(v);
  return name;
}

}  // namespace

void write_lp_format(const SdmolpProgram& prog, std::ostream& os) {
  os << "\\ superadditive lattice dual, " << prog.num_objectives
     << " objectives, " << prog.lattice.size() << " lattice points\n";
  os << "Minimize\n obj:";
  for (std::size_t i = 0; i < prog.num_objectives; ++i) {
    os << (i ? " + " : " ") << lattice_var_name(i, prog.rhs);
  }
  os << "\nSubject To\n";
  std::size_t row = 0;
  for (const auto& cb : prog.column_bounds) {
    for (std::size_t i = 0; i < prog.num_objectives; ++i) {
      os << " col" << ++row << ": "
         << lattice_var_name(i, prog.lattice[cb.lattice_index])
         << " >= " << format_scalar(cb.c[i]) << "\n";
    }
  }
  row = 0;
  for (const auto& pair : prog.superadd_pairs) {
    for (std::size_t i = 0; i < prog.num_objectives; ++i) {
      os << " sa" << ++row << ": ";
      if (pair.first == pair.second) {
        os << "2 " << lattice_var_name(i, prog.lattice[pair.first]);
      } else {
        os << lattice_var_name(i, prog.lattice[pair.first]) << " + "
           << lattice_var_name(i, prog.lattice[pair.second]);
      }
      os << " - " << lattice_var_name(i, prog.lattice[pair.sum]) << " <= 0\n";
    }
  }
  os << "Bounds\n";
  for (std::size_t i = 0; i < prog.num_objectives; ++i) {
    os << " " << lattice_var_name(i, prog.lattice[0]) << " = 0\n";
  }
  os << "End\n";
}

ObjVec vsdp_solve(const SdmolpProgram& prog) {
  const std::size_t num_points = prog.lattice.size();
  ObjVec result(prog.num_objectives);
  for (std::size_t i = 0; i < prog.num_objectives; ++i) {
    LpProblem lp;
    lp.direction = Direction::Minimize;
    lp.objective.assign(num_points, 0);
    lp.objective[prog.rhs_index] = 1;
    lp.lower.assign(num_points, 0);
    lp.upper.assign(num_points, std::numeric_limits<Scalar>::infinity());
    lp.upper[0] = 0;  // f_i(0) = 0
    for (const auto& cb : prog.column_bounds) {
      LinRow row;
      row.coeffs.assign(num_points, 0);
      row.coeffs[cb.lattice_index] = 1;
      row.rel = Relation::GreaterEq;
      row.rhs = cb.c[i];
      lp.rows.push_back(std::move(row));
    }
    for (const auto& pair : prog.superadd_pairs) {
      LinRow row;
      row.coeffs.assign(num_points, 0);
      row.coeffs[pair.first] += 1;
      row.coeffs[pair.second] += 1;
      row.coeffs[pair.sum] -= 1;
      row.rel = Relation::LessEq;
      row.rhs = 0;
      lp.rows.push_back(std::move(row));
    }
    const SolveOutcome res = lp_solve(lp);
    if (res.status == SolveOutcome::Status::Infeasible) {
      throw PreconditionError(
          "dual infeasible: a primal objective is unbounded above");
    }
    if (!res.optimal()) {
      throw NumericalError("lattice dual LP did not solve to optimality");
    }
    result[i] = res.value;
  }
  return result;
}

ObjVec vsdp_solve(const MoipInstance& inst, std::size_t lattice_cap) {
  return vsdp_solve(build_sdmolp(inst, lattice_cap));
}

std::vector<std::pair<std::vector<Scalar>, ExtendedSet>> value_function_sample(
    const MoipInstance& inst, const std::vector<std::vector<Scalar>>& betas,
    std::uint64_t cap) {
  inst.validate();
  std::vector<std::pair<std::vector<Scalar>, ExtendedSet>> out;
  for (const auto& beta : betas) {
    if (beta.size() != inst.num_rows()) {
      throw PreconditionError("rhs sample dimension mismatch");
    }
    MoipInstance shifted = inst;
    shifted.b = beta;
    out.emplace_back(beta, nondominated_set(shifted, cap));
  }
  return out;
}

HyperplaneFamily scalar_dual_family(const MoipInstance& inst,
                                    std::uint64_t cap) {
  inst.validate();
  const std::size_t k = inst.num_objectives();
  HyperplaneFamily family;
  if (k == 1) {
    IpProblem p = inst.full_problem();
    p.objective = inst.C[0];
    const SolveOutcome res = ip_solve(p, cap);
    if (!res.optimal()) {
      throw PreconditionError("dual family of an infeasible instance");
    }
    family.entries.push_back(Hyperplane{{1.0}, res.value});
    return family;
  }
  if (k != 2) {
    throw PreconditionError("scalar dual families handle k <= 2 only");
  }
  const SupportedFrontier frontier = supported_frontier(inst, cap);
  if (!frontier.feasible) {
    throw PreconditionError("dual family of an infeasible instance");
  }
  for (const auto& entry : frontier.entries) {
    bool seen = false;
    for (const auto& h : family.entries) {
      if (approx_equal(h.weight, entry.weight, 1e-12)) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    const SolveOutcome res = ip_solve(scalarize(inst, entry.weight), cap);
    if (!res.optimal()) {
      throw NumericalError("scalarized program failed on a feasible instance");
    }
    family.entries.push_back(Hyperplane{entry.weight, res.value});
  }
  return family;
}

bool fstar_contains(const ObjVec& z, const HyperplaneFamily& family,
                    Scalar tol) {
  if (family.entries.empty()) {
    throw PreconditionError("membership in an empty family is undefined");
  }
  bool on_some = false;
  for (const auto& h : family.entries) {
    if (h.weight.size() != z.size()) {
      throw PreconditionError("family dimension mismatch");
    }
    const Scalar v = dot(h.weight, z);
    if (v > h.value + tol) return false;  // a lower point of this plane dominates z
    if (v >= h.value - tol) on_some = true;
  }
  return on_some;
}

bool verify_strong_sdp(const MoipInstance& inst, std::uint64_t cap) {
  inst.validate();
  const HyperplaneFamily family = scalar_dual_family(inst, cap);
  if (inst.num_objectives() == 1) {
    return fstar_contains({family.entries.front().value}, family);
  }
  const SupportedFrontier frontier = supported_frontier(inst, cap);
  for (const auto& entry : frontier.entries) {
    if (!fstar_contains(entry.y, family)) return false;
  }
  return true;
}

}  // namespace moip
