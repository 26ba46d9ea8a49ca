// Command-line front end: solving, evaluation, verification, exhaustive
// ground truth, benchmarking, and scaling fits.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "labsolve/fit.hpp"
#include "labsolve/memetic.hpp"
#include "labsolve/oracle.hpp"
#include "labsolve/parallel.hpp"
#include "labsolve/skew.hpp"

using namespace labsolve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

nlohmann::json result_json(int n, const RunResult& res) {
  return {{"n", n},
          {"bestSeq", encode_hex(res.best)},
          {"bestE", res.best_energy},
          {"mf", res.merit},
          {"iterations", res.iterations},
          {"wallTime", res.wall_seconds},
          {"seed", res.seed},
          {"replicaId", res.replica_id},
          {"reachedTarget", res.reached_target}};
}

int run_solve(int n, long long target, int replicas, int scan_workers,
              std::uint64_t seed, std::optional<double> time_limit,
              std::optional<long long> max_iterations,
              const std::string& out_path) {
  ParallelConfig cfg;
  cfg.n = n;
  cfg.replicas = replicas;
  cfg.base_seed = seed;
  cfg.memetic.target_energy = target;
  cfg.memetic.max_seconds = time_limit;
  cfg.memetic.max_iterations = max_iterations;
  cfg.memetic.scan_workers = scan_workers;
  RunResult res = run_replicas(cfg);
  nlohmann::json doc = result_json(n, res);
  std::cout << doc.dump() << '\n';
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

int run_energy(const std::string& hex, int n) {
  Sequence s = decode_hex(hex, n);
  long long e = energy(s);
  std::printf("E=%lld MF=%.4f\n", e, merit_factor(n, e));
  return kExitOk;
}

int run_skew(const std::string& hex, int n, std::uint64_t budget, bool edits) {
  Sequence s = decode_hex(hex, n);
  DeviationResult res =
      edits ? deviation_with_edits(s, budget) : deviation(s, budget);
  if (res.budget_exceeded) {
    std::printf("budget-exceeded after %llu evaluations (best bound %d)\n",
                static_cast<unsigned long long>(res.evaluations), res.value);
    return kExitVerifyFailed;
  }
  std::printf("d=%d\n", res.value);
  return kExitOk;
}

int run_verify(const std::string& table_path, std::uint64_t budget) {
  VerifyReport report = verify_published(read_table_file(table_path), budget);
  for (const VerifyEntry& entry : report.entries) {
    if (!entry.error.empty()) {
      std::printf("n=%d FAIL (%s)\n", entry.expected.n, entry.error.c_str());
      continue;
    }
    std::printf("n=%d E=%lld%s MF=%.4f%s d=%d%s%s -> %s\n", entry.expected.n,
                entry.energy, entry.energy_ok ? "" : "(!)", entry.merit,
                entry.merit_ok ? "" : "(!)", entry.deviation,
                entry.deviation_ok ? "" : "(!)",
                entry.budget_exceeded ? " budget-exceeded" : "",
                entry.pass() ? "ok" : "FAIL");
  }
  std::printf("%s\n", report.all_pass ? "all rows verified" : "verification FAILED");
  return report.all_pass ? kExitOk : kExitVerifyFailed;
}

int run_oracle(int n, int workers, bool local_optima, bool witnesses) {
  if (local_optima) {
    std::printf("n=%d localOptima=%lld\n", n, enumerate_local_optima(n, workers));
    return kExitOk;
  }
  BruteForceResult res = brute_force_optimum(n, workers);
  std::printf("n=%d optimalE=%lld MF=%.4f witnesses=%zu\n", n,
              res.optimal_energy, merit_factor(n, res.optimal_energy),
              res.witnesses.size());
  if (witnesses)
    for (const Sequence& w : res.witnesses)
      std::printf("%s\n", encode_hex(w).c_str());
  return kExitOk;
}

int run_bench(int n_min, int n_max, const std::string& targets_path, int reps,
              const std::string& out_path, int replicas, int scan_workers,
              std::uint64_t seed, double time_limit) {
  BenchPlan plan;
  for (int n = n_min; n <= n_max; ++n) plan.n_values.push_back(n);
  plan.targets = read_targets_file(targets_path);
  plan.repetitions = reps;
  plan.base.replicas = replicas;
  plan.base.base_seed = seed;
  plan.base.memetic.max_seconds = time_limit;
  plan.base.memetic.scan_workers = scan_workers;
  std::vector<TtsSample> samples = run_tts(plan);
  write_samples(out_path, samples);
  int censored = 0;
  for (const TtsSample& s : samples) censored += !s.reached_target;
  for (const auto& [n, median] : median_runtime_by_n(samples))
    std::printf("n=%d median=%.6f s\n", n, median);
  std::printf("%zu samples (%d censored) -> %s\n", samples.size(), censored,
              out_path.c_str());
  return kExitOk;
}

void print_fit(const FitResult& fit) {
  std::printf("nMinFit=%d nMaxFit=%d points=%d a=%.6e (%.6e, %.6e) b=%.4f "
              "(%.4f, %.4f)\n",
              fit.n_min_fit, fit.n_max_fit, fit.points_used, fit.a,
              fit.a_ci.first, fit.a_ci.second, fit.b, fit.b_ci.first,
              fit.b_ci.second);
}

int run_fit(const std::string& in_path, int n_min_fit, int n_max_fit,
            int sweep_step) {
  std::vector<TtsSample> samples = read_samples(in_path);
  if (sweep_step <= 0) {
    print_fit(fit_exponential(samples, n_min_fit, n_max_fit));
    return kExitOk;
  }
  // Sensitivity sweep: one fit per window start, widest window first.
  for (int lo = n_min_fit; lo + 2 <= n_max_fit; lo += sweep_step)
    print_fit(fit_exponential(samples, lo, n_max_fit));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-autocorrelation binary sequence toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run the parallel memetic search");
  int solve_n = 0;
  long long solve_target = 0;
  int solve_replicas = 1;
  int solve_scan_workers = 1;
  std::uint64_t solve_seed = 0;
  double solve_time_limit = 0.0;
  long long solve_iters = 0;
  std::string solve_out;
  solve->add_option("--n", solve_n, "Sequence length")->required();
  solve->add_option("--target", solve_target, "Stop at this energy")->required();
  solve->add_option("--replicas", solve_replicas, "Independent replicas");
  solve->add_option("--scan-workers", solve_scan_workers,
                    "Threads per neighborhood scan");
  solve->add_option("--seed", solve_seed, "Base seed (replica r adds r)");
  solve->add_option("--time-limit", solve_time_limit,
                    "Wall-clock budget in seconds (0 = none)");
  solve->add_option("--iters", solve_iters,
                    "Memetic iteration budget per replica (0 = none)");
  solve->add_option("--out", solve_out, "Append the JSON result to this file");

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "Evaluate a hex sequence");
  std::string energy_hex;
  int energy_n = 0;
  energy_cmd->add_option("--hex", energy_hex, "Hex encoding")->required();
  energy_cmd->add_option("--n", energy_n, "Sequence length")->required();

  // skew
  auto* skew_cmd =
      app.add_subcommand("skew", "Deviation from skew-symmetry of a hex sequence");
  std::string skew_hex;
  int skew_n = 0;
  std::uint64_t skew_budget = 0;
  bool skew_edits = false;
  skew_cmd->add_option("--hex", skew_hex, "Hex encoding")->required();
  skew_cmd->add_option("--n", skew_n, "Sequence length")->required();
  skew_cmd->add_option("--budget", skew_budget,
                       "Cap on pair-count evaluations (0 = unlimited)");
  skew_cmd->add_flag("--edits", skew_edits,
                     "Use the wider single-edit variant of the metric");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a published table end to end");
  std::string verify_table;
  std::uint64_t verify_budget = 0;
  verify_cmd->add_option("--table", verify_table, "Table file")->required();
  verify_cmd->add_option("--budget", verify_budget,
                         "Deviation evaluation cap per row (0 = unlimited)");

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive ground truth for small n");
  int oracle_n = 0;
  int oracle_workers = 1;
  bool oracle_local = false;
  bool oracle_witnesses = false;
  oracle_cmd->add_option("--n", oracle_n, "Sequence length")->required();
  oracle_cmd->add_option("--workers", oracle_workers, "Enumeration threads");
  oracle_cmd->add_flag("--local-optima", oracle_local,
                       "Count strict local optima instead");
  oracle_cmd->add_flag("--witnesses", oracle_witnesses,
                       "Print every optimal sequence (canonical hex)");

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "Measure time-to-target over a size range");
  int bench_n_min = 0, bench_n_max = 0, bench_reps = 5;
  std::string bench_targets, bench_out;
  int bench_replicas = 1;
  int bench_scan_workers = 1;
  std::uint64_t bench_seed = 0;
  double bench_time_limit = 60.0;
  bench_cmd->add_option("--n-min", bench_n_min, "Smallest length")->required();
  bench_cmd->add_option("--n-max", bench_n_max, "Largest length")->required();
  bench_cmd->add_option("--targets", bench_targets, "Targets file (n energy)")
      ->required();
  bench_cmd->add_option("--reps", bench_reps, "Samples per length");
  bench_cmd->add_option("--out", bench_out, "Samples file (JSON lines)")
      ->required();
  bench_cmd->add_option("--replicas", bench_replicas, "Replicas per run");
  bench_cmd->add_option("--scan-workers", bench_scan_workers,
                        "Threads per neighborhood scan");
  bench_cmd->add_option("--seed", bench_seed, "Base seed");
  bench_cmd->add_option("--time-limit", bench_time_limit,
                        "Per-run budget in seconds (censors the sample)");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Exponential scaling fit of samples");
  std::string fit_in;
  int fit_n_min = 0, fit_n_max = 0, fit_sweep = 0;
  fit_cmd->add_option("--in", fit_in, "Samples file")->required();
  fit_cmd->add_option("--n-min-fit", fit_n_min, "Window start")->required();
  fit_cmd->add_option("--n-max-fit", fit_n_max, "Window end")->required();
  fit_cmd->add_option("--sweep", fit_sweep,
                      "Also fit every window start in steps of this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed())
      return run_solve(solve_n, solve_target, solve_replicas,
                       solve_scan_workers, solve_seed,
                       solve_time_limit > 0
                           ? std::optional<double>(solve_time_limit)
                           : std::nullopt,
                       solve_iters > 0 ? std::optional<long long>(solve_iters)
                                       : std::nullopt,
                       solve_out);
    if (energy_cmd->parsed()) return run_energy(energy_hex, energy_n);
    if (skew_cmd->parsed())
      return run_skew(skew_hex, skew_n, skew_budget, skew_edits);
    if (verify_cmd->parsed()) return run_verify(verify_table, verify_budget);
    if (oracle_cmd->parsed())
      return run_oracle(oracle_n, oracle_workers, oracle_local,
                        oracle_witnesses);
    if (bench_cmd->parsed())
      return run_bench(bench_n_min, bench_n_max, bench_targets, bench_reps,
                       bench_out, bench_replicas, bench_scan_workers,
                       bench_seed, bench_time_limit);
    if (fit_cmd->parsed())
      return run_fit(fit_in, fit_n_min, fit_n_max, fit_sweep);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
