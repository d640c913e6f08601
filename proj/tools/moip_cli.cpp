// Command line front end: solve instances, compute relaxations and bound
// sets, run property checks and the bound-quality experiment.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "moip/bound_sets.hpp"
#include "moip/experiment.hpp"
#include "moip/io.hpp"
#include "moip/superadditive.hpp"

namespace {

using namespace moip;

void print_points(std::ostream& os, const std::vector<ObjVec>& pts) {
  for (const auto& p : pts) {
    os << "point";
    for (Scalar v : p) os << " " << format_scalar(v);
    os << "\n";
  }
}

void print_extended(std::ostream& os, const ExtendedSet& set) {
  switch (set.kind()) {
    case ExtendedSet::Kind::PlusInf:
      os << "set +Minf\n";
      return;
    case ExtendedSet::Kind::MinusInf:
      os << "set -Minf\n";
      return;
    case ExtendedSet::Kind::Finite:
      os << "set finite " << set.points().size() << "\n";
      print_points(os, set.points());
      return;
  }
}

void print_chain(std::ostream& os, const FrontierChain& chain) {
  switch (chain.status) {
    case FrontierChain::Status::Unbounded:
      os << "chain +Minf\n";
      return;
    case FrontierChain::Status::Infeasible:
      os << "chain -Minf\n";
      return;
    case FrontierChain::Status::Finite:
      os << "chain finite " << chain.extreme_points.size() << "\n";
      print_points(os, chain.extreme_points);
      return;
  }
}

std::vector<Scalar> parse_csv_scalars(const std::string& text) {
  std::vector<Scalar> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    vals.push_back(parse_scalar_token(item, 0));
  }
  return vals;
}

int run_check(const MoipInstance& inst, const std::string& property,
              std::uint64_t seed, std::size_t trials) {
  auto rng = SplitMix64::stream(seed, 0, 0);
  if (property == "weak-duality") {
    const ExtendedSet nd = nondominated_set(inst);
    const LagrangianEvaluator eval(inst);
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Scalar> vals(inst.num_objectives() * inst.num_dualized());
      for (auto& v : vals) v = rng.uniform_real() * 2.5;
      const MultiplierMatrix lambda(inst.num_objectives(), inst.num_dualized(),
                                    vals);
      if (!preceq(nd, eval.relax(lambda))) {
        std::cout << "check weak-duality FAIL at trial " << t << "\n";
        return 1;
      }
    }
    std::cout << "check weak-duality PASS (" << trials << " multipliers)\n";
    return 0;
  }
  if (property == "fr-lag") {
    std::vector<std::vector<Scalar>> dirs;
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Scalar> d(inst.num_vars());
      for (auto& v : d) v = rng.uniform_real() * 2 - 1;
      dirs.push_back(std::move(d));
    }
    const FrLagResult res = check_fr_lag(inst, dirs);
    if (res.violated) {
      std::cout << "check fr-lag VIOLATED gap " << format_scalar(res.gap)
                << " at direction";
      for (Scalar v : res.direction) std::cout << " " << format_scalar(v);
      std::cout << "\n";
    } else {
      std::cout << "check fr-lag NOT_FALSIFIED (" << trials << " directions)\n";
    }
    return 0;
  }
  if (property == "prop9") {
    const auto xs = enumerate_x(inst);
    std::vector<ObjVec> values;
    for (const auto& x : xs) values.push_back(inst.objective_value(x));
    const ExtendedSet u = dual_approx(inst, MultiplierGrid{});
    if (!u.is_finite()) {
      std::cout << "check prop9 SKIP (dual approximation not finite)\n";
      return 0;
    }
    for (const auto& z : u.points()) {
      if (!halfspace_union_check(z, values)) {
        std::cout << "check prop9 FAIL\n";
        return 1;
      }
    }
    std::cout << "check prop9 PASS (" << u.points().size() << " dual points)\n";
    return 0;
  }
  if (property == "value-fn") {
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Scalar> b1(inst.num_rows()), b2(inst.num_rows()), sum;
      for (std::size_t r = 0; r < inst.num_rows(); ++r) {
        b1[r] = static_cast<Scalar>(rng.uniform_int(0, 4));
        b2[r] = b1[r] + static_cast<Scalar>(rng.uniform_int(0, 3));
        sum.push_back(b1[r] + b2[r]);
      }
      const auto samples = value_function_sample(inst, {b1, b2, sum});
      const auto& z1 = samples[0].second;
      const auto& z2 = samples[1].second;
      const auto& z12 = samples[2].second;
      if (!preceq(z1, z2)) {
        std::cout << "check value-fn FAIL (monotonicity) at trial " << t << "\n";
        return 1;
      }
      if (z1.is_finite() && z2.is_finite()) {
        const auto sum_set =
            max_filter(minkowski_sum(z1.points(), z2.points()));
        if (!preceq(sum_set, z12)) {
          std::cout << "check value-fn FAIL (superadditivity) at trial " << t
                    << "\n";
          return 1;
        }
      }
    }
    std::cout << "check value-fn PASS (" << trials << " rhs samples)\n";
    return 0;
  }
  throw PreconditionError("unknown property: " + property);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiobjective integer programming relaxations and bound sets"};
  app.require_subcommand(1);

  std::string file, out_dir;
  std::string relax_kind = "lr", lambda_csv, method = "lagrangian";
  std::string property = "weak-duality", problem = "knapsack", gen_out;
  Scalar grid_max = 2.5;
  std::size_t grid_count = 51, trials = 20, n_vars = 20, check_trials = 200;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "nondominated set of an instance");
  solve->add_option("file", file)->required();

  auto* supported = app.add_subcommand("supported", "supported frontier");
  supported->add_option("file", file)->required();

  auto* relax = app.add_subcommand("relax", "continuous / convex hull / Lagrangian relaxation");
  relax->add_option("file", file)->required();
  relax->add_option("--kind", relax_kind, "molp|ch|lr")->required();
  relax->add_option("--lambda", lambda_csv,
                    "k*m1 multipliers, row-major, comma separated");

  auto* dual = app.add_subcommand("dual-approx", "grid approximation of the Lagrangian dual");
  dual->add_option("file", file)->required();
  dual->add_option("--grid-max", grid_max);
  dual->add_option("--grid-count", grid_count);

  auto* bounds = app.add_subcommand("bounds", "bound report for one instance");
  bounds->add_option("file", file)->required();
  bounds->add_option("--method", method, "lagrangian|ch");
  bounds->add_option("--grid-max", grid_max);
  bounds->add_option("--grid-count", grid_count);

  auto* vsdp = app.add_subcommand("vsdp", "vector-valued superadditive dual");
  vsdp->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "property checks on an instance");
  check->add_option("file", file)->required();
  check->add_option("--property", property,
                    "weak-duality|fr-lag|prop9|value-fn");
  check->add_option("--seed", seed);
  check->add_option("--trials", check_trials);

  auto* experiment = app.add_subcommand("experiment", "bound quality experiment");
  experiment->add_option("--problem", problem, "knapsack|assignment");
  experiment->add_option("--trials", trials);
  experiment->add_option("--seed", seed);
  experiment->add_option("--n", n_vars, "knapsack variables");
  experiment->add_option("--grid-count", grid_count);
  experiment->add_option("--grid-max", grid_max);
  experiment->add_option("--out", out_dir, "directory for csv/summary files");

  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("--problem", problem, "knapsack|assignment");
  gen->add_option("--seed", seed);
  gen->add_option("--n", n_vars, "knapsack variables");
  gen->add_option("--trial", trials)->default_val(0);
  gen->add_option("-o,--output", gen_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      print_extended(std::cout, nondominated_set(load_instance_file(file)));
    } else if (supported->parsed()) {
      const auto frontier = supported_frontier(load_instance_file(file));
      if (!frontier.feasible) {
        std::cout << "frontier infeasible\n";
        return 0;
      }
      std::cout << "frontier " << frontier.entries.size() << "\n";
      for (const auto& e : frontier.entries) {
        std::cout << "point";
        for (Scalar v : e.y) std::cout << " " << format_scalar(v);
        std::cout << " weight";
        for (Scalar v : e.weight) std::cout << " " << format_scalar(v);
        std::cout << " x";
        for (long long v : e.x) std::cout << " " << v;
        std::cout << "\n";
      }
    } else if (relax->parsed()) {
      const auto inst = load_instance_file(file);
      if (relax_kind == "molp") {
        print_chain(std::cout, molp_relaxation_frontier(inst));
      } else if (relax_kind == "ch") {
        print_chain(std::cout, ch_relaxation_frontier(inst));
      } else if (relax_kind == "lr") {
        const auto vals = parse_csv_scalars(lambda_csv);
        const MultiplierMatrix lambda(inst.num_objectives(), inst.num_dualized(),
                                      vals);
        print_extended(std::cout, lagrangian_relaxation(inst, lambda));
      } else {
        throw PreconditionError("unknown relaxation kind: " + relax_kind);
      }
    } else if (dual->parsed()) {
      const auto inst = load_instance_file(file);
      print_extended(std::cout,
                     dual_approx(inst, MultiplierGrid{grid_max, grid_count}));
    } else if (bounds->parsed()) {
      const auto inst = load_instance_file(file);
      const auto frontier = supported_frontier(inst);
      if (!frontier.feasible || frontier.entries.empty()) {
        throw PreconditionError("instance has no supported points");
      }
      const auto lower = local_nadir_lower_bound(frontier);
      const ExtendedSet nd = nondominated_set(inst);
      std::vector<ObjVec> upper;
      Scalar spacing = 0;
      bool strong = false;
      if (method == "lagrangian") {
        const ExtendedSet u =
            dual_approx(inst, MultiplierGrid{grid_max, grid_count});
        upper = u.points();
        strong = is_strong_upper_bound(upper, nd);
      } else if (method == "ch") {
        FrontierChain chain = ch_relaxation_frontier(inst);
        spacing = kChainSampleFraction *
                  bound_quality(lower, chain.extreme_points).gamma;
        upper = discretize_chain(chain, spacing);
        strong = true;
        for (const auto& y : nd.points()) {
          if (!chain_contains(chain, y)) strong = false;
        }
      } else {
        throw PreconditionError("unknown bound method: " + method);
      }
      const BoundQuality q = bound_quality(lower, upper);
      std::cout << "method " << method << "\n";
      std::cout << "d " << format_scalar(q.d) << "\n";
      std::cout << "gamma " << format_scalar(q.gamma) << "\n";
      std::cout << "strong " << (strong ? 1 : 0) << "\n";
      if (spacing > 0) {
        std::cout << "chain_sample_spacing " << format_scalar(spacing) << "\n";
      }
      std::cout << "L " << lower.size() << "\n";
      print_points(std::cout, lower);
      std::cout << "U " << upper.size() << "\n";
      print_points(std::cout, upper);
    } else if (vsdp->parsed()) {
      const auto inst = load_instance_file(file);
      const ObjVec y = vsdp_solve(inst);
      std::cout << "vsdp";
      for (Scalar v : y) std::cout << " " << format_scalar(v);
      std::cout << "\n";
    } else if (check->parsed()) {
      return run_check(load_instance_file(file), property, seed, check_trials);
    } else if (experiment->parsed()) {
      ExperimentConfig cfg;
      cfg.problem = problem == "assignment" ? ProblemKind::Assignment
                                            : ProblemKind::Knapsack;
      if (problem != "assignment" && problem != "knapsack") {
        throw PreconditionError("unknown problem kind: " + problem);
      }
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.grid_max = grid_max;
      cfg.grid_count = grid_count;
      cfg.knapsack_vars = n_vars;
      const ExperimentReport report = run_experiment(cfg);
      write_summary(report, std::cout);
      write_csv(report, std::cout);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream csv(out_dir + "/experiment.csv");
        write_csv(report, csv);
        std::ofstream summary(out_dir + "/summary.json");
        write_summary(report, summary);
      }
    } else if (gen->parsed()) {
      ExperimentConfig cfg;
      cfg.problem = problem == "assignment" ? ProblemKind::Assignment
                                            : ProblemKind::Knapsack;
      cfg.seed = seed;
      cfg.knapsack_vars = n_vars;
      const MoipInstance inst = gen_instance(cfg, trials);
      std::ofstream os(gen_out);
      if (!os) throw PreconditionError("cannot write " + gen_out);
      os << serialize_instance(inst);
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
