#include "moip/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

namespace moip {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

MethodStats aggregate(const ExperimentReport& report, bool lagrangian) {
  MethodStats stats;
  const auto& trials = report.trial_results;
  if (trials.empty()) return stats;
  Scalar sum = 0;
  for (const auto& t : trials) {
    const BoundReport& r = lagrangian ? t.lagrangian : t.convex_hull;
    sum += r.d;
    if (r.strong) ++stats.strong_count;
  }
  stats.mean_d = sum / static_cast<Scalar>(trials.size());
  if (trials.size() > 1) {
    Scalar ss = 0;
    for (const auto& t : trials) {
      const BoundReport& r = lagrangian ? t.lagrangian : t.convex_hull;
      const Scalar dev = r.d - stats.mean_d;
      ss += dev * dev;
    }
    stats.sd_d = std::sqrt(ss / static_cast<Scalar>(trials.size() - 1));
  }
  return stats;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report;
  report.cfg = cfg;
  const MultiplierGrid grid{cfg.grid_max, cfg.grid_count};

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    try {
      const MoipInstance inst = gen_instance(cfg, trial);
      const SupportedFrontier frontier = supported_frontier(inst);
      if (!frontier.feasible || frontier.entries.empty()) {
        throw PreconditionError("generated instance has no supported points");
      }
      const std::vector<ObjVec> lower = local_nadir_lower_bound(frontier);
      const ExtendedSet nd = nondominated_set(inst);

      TrialResult result;
      result.trial = trial;

      {
        const auto start = std::chrono::steady_clock::now();
        const ExtendedSet u = dual_approx(inst, grid);
        BoundReport& r = result.lagrangian;
        r.method = BoundReport::Method::Lagrangian;
        r.lower = lower;
        r.upper = u.points();
        const BoundQuality q = bound_quality(r.lower, r.upper);
        r.d = q.d;
        r.gamma = q.gamma;
        r.strong = is_strong_upper_bound(r.upper, nd);
        result.wall_ms_lagrangian = elapsed_ms(start);
      }

      {
        const auto start = std::chrono::steady_clock::now();
        FrontierChain chain;
        chain.status = FrontierChain::Status::Finite;
        for (const auto& e : frontier.entries) chain.extreme_points.push_back(e.y);
        BoundReport& r = result.convex_hull;
        r.method = BoundReport::Method::ConvexHull;
        r.lower = lower;
        // The chain enters the metric through a discretization whose spacing
        // derives from a provisional scale over L and the chain's extremes.
        const Scalar gamma0 =
            bound_quality(lower, chain.extreme_points).gamma;
        r.chain_sample_spacing = kChainSampleFraction * gamma0;
        r.upper = discretize_chain(chain, r.chain_sample_spacing);
        const BoundQuality q = bound_quality(r.lower, r.upper);
        r.d = q.d;
        r.gamma = q.gamma;
        // Strength against the chain itself, not its samples.
        r.strong = true;
        for (const auto& y : nd.points()) {
          if (!chain_contains(chain, y)) {
            r.strong = false;
            break;
          }
        }
        result.wall_ms_convex_hull = elapsed_ms(start);
      }

      report.trial_results.push_back(std::move(result));
    } catch (const std::exception& e) {
      throw NumericalError("trial " + std::to_string(trial) + " (seed " +
                           std::to_string(cfg.seed) + ") failed: " + e.what());
    }
  }

  report.lagrangian = aggregate(report, true);
  report.convex_hull = aggregate(report, false);
  report.sd_degenerate = cfg.trials == 1;
  return report;
}

namespace {

const char* method_name(BoundReport::Method m) {
  return m == BoundReport::Method::Lagrangian ? "lagrangian" : "convex_hull";
}

void write_csv_row(std::ostream& os, std::size_t trial, const BoundReport& r,
                   double wall_ms) {
  os << trial << "," << method_name(r.method) << "," << format_scalar(r.d)
     << "," << format_scalar(r.gamma) << "," << (r.strong ? 1 : 0) << ","
     << r.upper.size() << "," << r.lower.size() << ","
     << format_scalar(wall_ms) << "\n";
}

}  // namespace

void write_csv(const ExperimentReport& report, std::ostream& os) {
  os << "trial,method,d,gamma,strong,u_size,l_size,wall_ms\n";
  for (const auto& t : report.trial_results) {
    write_csv_row(os, t.trial, t.lagrangian, t.wall_ms_lagrangian);
    write_csv_row(os, t.trial, t.convex_hull, t.wall_ms_convex_hull);
  }
}

void write_summary(const ExperimentReport& report, std::ostream& os) {
  const auto& cfg = report.cfg;
  os << "{\n";
  os << "  \"problem\": \""
     << (cfg.problem == ProblemKind::Knapsack ? "knapsack" : "assignment")
     << "\",\n";
  os << "  \"trials\": " << cfg.trials << ",\n";
  os << "  \"seed\": " << cfg.seed << ",\n";
  os << "  \"grid_max\": " << format_scalar(cfg.grid_max) << ",\n";
  os << "  \"grid_count\": " << cfg.grid_count << ",\n";
  os << "  \"rhs_rule\": \"half coefficient sum, rounded up\",\n";
  os << "  \"lagrangian\": {\"mean_d\": " << format_scalar(report.lagrangian.mean_d)
     << ", \"sd_d\": " << format_scalar(report.lagrangian.sd_d)
     << ", \"strong\": " << report.lagrangian.strong_count << "},\n";
  os << "  \"convex_hull\": {\"mean_d\": " << format_scalar(report.convex_hull.mean_d)
     << ", \"sd_d\": " << format_scalar(report.convex_hull.sd_d)
     << ", \"strong\": " << report.convex_hull.strong_count << "},\n";
  os << "  \"sd_degenerate\": " << (report.sd_degenerate ? "true" : "false")
     << "\n";
  os << "}\n";
}

std::string canonical_serialization(const ExperimentReport& report) {
  std::ostringstream os;
  const auto& cfg = report.cfg;
  os << "cfg "
     << (cfg.problem == ProblemKind::Knapsack ? "knapsack" : "assignment")
     << " trials=" << cfg.trials << " seed=" << cfg.seed
     << " grid=" << format_scalar(cfg.grid_max) << "x" << cfg.grid_count
     << " n=" << cfg.knapsack_vars << " s=" << cfg.assignment_size << "\n";
  auto dump_points = [&os](const std::vector<ObjVec>& pts) {
    for (const auto& p : pts) {
      os << " (";
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << format_scalar(p[i]);
      }
      os << ")";
    }
    os << "\n";
  };
  for (const auto& t : report.trial_results) {
    for (const BoundReport* r : {&t.lagrangian, &t.convex_hull}) {
      os << "trial " << t.trial << " " << method_name(r->method)
         << " d=" << format_scalar(r->d) << " gamma=" << format_scalar(r->gamma)
         << " strong=" << (r->strong ? 1 : 0)
         << " spacing=" << format_scalar(r->chain_sample_spacing) << "\n";
      os << "L:";
      dump_points(r->lower);
      os << "U:";
      dump_points(r->upper);
    }
  }
  for (const MethodStats* s : {&report.lagrangian, &report.convex_hull}) {
    os << "stats mean=" << format_scalar(s->mean_d)
       << " sd=" << format_scalar(s->sd_d) << " strong=" << s->strong_count
       << "\n";
  }
  return os.str();
}

}  // namespace moip
