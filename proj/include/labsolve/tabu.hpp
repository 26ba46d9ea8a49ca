#pragma once

#include <string>
#include <vector>

#include "labsolve/rng.hpp"
#include "labsolve/sequence.hpp"

namespace labsolve {

struct TabuParams {
  double min_tabu_factor = 0.10;  // fraction of maxIter a flip stays tabu, lower bound
  double max_tabu_factor = 0.12;  // upper bound
};

struct TabuStep {
  int iteration;     // 1-based
  int position;      // flipped position
  long long energy;  // pivot energy after the flip
  int tenure;        // iterations the position stays inadmissible
  bool fallback;     // every position was tabu; drawn uniformly instead
};

struct TabuTrace {
  int max_iter = 0;
  int min_tabu = 0;
  int max_tabu = 0;
  std::vector<TabuStep> steps;
};

struct TabuResult {
  Sequence best;
  long long energy = 0;
};

// Iteration budget draw: uniform on [0, n] plus floor(n/2).
int sample_max_iter(int n, Rng& rng);

// Steepest-descent tabu walk from `seq` for a sampled number of iterations,
// returning the best sequence visited (the input counts as visited).
TabuResult tabu_search(const Sequence& seq, const TabuParams& params, Rng& rng,
                       int scan_workers = 1, TabuTrace* trace = nullptr);

// Line-oriented rendering of a trace for debugging; one step per line.
std::string format_trace(const TabuTrace& trace);

}  // namespace labsolve
