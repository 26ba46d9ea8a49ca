#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "labsolve/rng.hpp"
#include "labsolve/sequence.hpp"
#include "labsolve/tabu.hpp"

namespace labsolve {

struct MemeticParams {
  int population_size = 100;
  double p_comb = 0.9;                  // crossover vs copy-one-parent
  std::optional<double> p_mutate;       // per-bit flip probability; 1/n when unset
  long long target_energy = 0;
  std::optional<double> max_seconds;
  std::optional<long long> max_iterations;
  int scan_workers = 1;
  TabuParams tabu;
};

struct RunResult {
  Sequence best;
  long long best_energy = 0;
  double merit = 0.0;
  long long iterations = 0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  int replica_id = 0;
  bool reached_target = false;
};

struct MemeticIterRecord {
  long long iteration;     // 0-based loop index
  bool stop_seen;          // external stop flag observed at the top of the loop
  long long child_energy;  // refined child's energy; -1 when stop_seen
};

struct MemeticTrace {
  std::vector<MemeticIterRecord> iters;
};

// Binary tournament twice over the population's cached energies; a tied
// tournament is settled by a fair coin. The two picks are independent, so
// both may name the same individual.
std::pair<int, int> select_parents(const std::vector<long long>& energies,
                                   Rng& rng);

// Uniform crossover: each position from either parent with probability 1/2.
Sequence combine(const Sequence& parent1, const Sequence& parent2, Rng& rng);

// Independent per-position flip with probability p_mutate in (0, 1].
Sequence mutate(const Sequence& child, double p_mutate, Rng& rng);

// Memetic loop: random population, tournament selection, uniform crossover,
// mutation, tabu refinement, uniform replacement. Runs until the target
// energy is reached, a budget expires, or `stop` (polled once per iteration)
// is set by another replica.
RunResult memetic_tabu(int n, const MemeticParams& params, std::uint64_t seed,
                       const std::atomic<bool>* stop = nullptr,
                       MemeticTrace* trace = nullptr, int replica_id = 0);

}  // namespace labsolve
