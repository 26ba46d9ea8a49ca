#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "labsolve/parallel.hpp"

namespace labsolve {

struct TtsSample {
  int n = 0;
  long long target_energy = 0;
  double runtime_seconds = 0.0;
  bool reached_target = false;  // false = censored by a budget
  std::uint64_t seed = 0;
  int replicas = 1;
};

struct BenchPlan {
  std::vector<int> n_values;
  std::map<int, long long> targets;  // must cover every n in n_values
  int repetitions = 1;               // samples per n
  ParallelConfig base;               // n and target overwritten per run
};

// Runs repetitions * n_values.size() timed solves; each run gets a disjoint
// seed block (base_seed + run_index * replicas).
std::vector<TtsSample> run_tts(const BenchPlan& plan);

// Linearly interpolated quantile of an unordered, nonempty sample.
double quantile(std::vector<double> values, double q);

// Median runtime per n over uncensored samples; n with none are dropped.
std::map<int, double> median_runtime_by_n(const std::vector<TtsSample>& samples);

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  std::pair<double, double> a_ci{0.0, 0.0};  // 95%
  std::pair<double, double> b_ci{0.0, 0.0};
  int n_min_fit = 0;
  int n_max_fit = 0;
  int points_used = 0;  // distinct n with an uncensored median in the window
};

// Least-squares fit of log(median runtime) against n on [n_min_fit,
// n_max_fit], reported as runtime ~ a * b^n with Student-t 95% confidence
// intervals. Needs at least three points.
FitResult fit_exponential(const std::vector<TtsSample>& samples, int n_min_fit,
                          int n_max_fit);

// JSON-lines persistence, one sample per line.
void write_samples(const std::string& path,
                   const std::vector<TtsSample>& samples);
std::vector<TtsSample> read_samples(const std::string& path);

// Whitespace-separated "n energy" per line; '#' comments and blanks skipped.
std::map<int, long long> read_targets_file(const std::string& path);

}  // namespace labsolve
