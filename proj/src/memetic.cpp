#include "labsolve/memetic.hpp"

#include <chrono>
#include <stdexcept>

namespace labsolve {

std::pair<int, int> select_parents(const std::vector<long long>& energies,
                                   Rng& rng) {
  long long k = static_cast<long long>(energies.size());
  if (k < 2) throw std::invalid_argument("tournament needs population >= 2");
  auto tournament = [&]() {
    int a = static_cast<int>(rng.uniform_int(0, k - 1));
    int b = static_cast<int>(rng.uniform_int(0, k - 1));
    if (energies[a] < energies[b]) return a;
    if (energies[b] < energies[a]) return b;
    return rng.uniform_int(0, 1) == 0 ? a : b;
  };
  int first = tournament();
  int second = tournament();
  return {first, second};
}

Sequence combine(const Sequence& parent1, const Sequence& parent2, Rng& rng) {
  if (parent1.size() != parent2.size())
    throw std::invalid_argument("combine needs equal lengths");
  Sequence child(parent1.size());
  for (int w = 0; w < child.word_count(); ++w) {
    std::uint64_t mask = rng.bits64();
    child.set_word(w, (parent1.word(w) & mask) | (parent2.word(w) & ~mask));
  }
  return child;
}

Sequence mutate(const Sequence& child, double p_mutate, Rng& rng) {
  if (!(p_mutate > 0.0) || p_mutate > 1.0)
    throw std::invalid_argument("mutation probability must be in (0, 1]");
  Sequence out = child;
  for (int i = 0; i < out.size(); ++i)
    if (rng.uniform01() < p_mutate) out.flip(i);
  return out;
}

RunResult memetic_tabu(int n, const MemeticParams& params, std::uint64_t seed,
                       const std::atomic<bool>* stop, MemeticTrace* trace,
                       int replica_id) {
  if (n < 2) throw std::invalid_argument("memetic needs length >= 2");
  if (params.population_size < 2)
    throw std::invalid_argument("population must be >= 2");
  if (params.p_comb < 0.0 || params.p_comb > 1.0)
    throw std::invalid_argument("p_comb must be in [0, 1]");
  double p_mutate = params.p_mutate.value_or(1.0 / n);
  if (!(p_mutate > 0.0) || p_mutate > 1.0)
    throw std::invalid_argument("mutation probability must be in (0, 1]");
  if (params.scan_workers < 1)
    throw std::invalid_argument("scan workers must be >= 1");

  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(clock::now() - t0).count();
  };

  Rng rng(seed);
  int k = params.population_size;
  std::vector<Sequence> population;
  population.reserve(k);
  std::vector<long long> energies(k);
  for (int i = 0; i < k; ++i) population.push_back(Sequence::random(n, rng));
  for (int i = 0; i < k; ++i) energies[i] = energy(population[i]);

  int best_idx = 0;
  for (int i = 1; i < k; ++i)
    if (energies[i] < energies[best_idx]) best_idx = i;
  Sequence best = population[best_idx];
  long long best_energy = energies[best_idx];

  long long iterations = 0;
  while (best_energy > params.target_energy) {
    if (stop && stop->load(std::memory_order_acquire)) {
      if (trace) trace->iters.push_back({iterations, true, -1});
      break;
    }
    if (params.max_iterations && iterations >= *params.max_iterations) break;
    if (params.max_seconds && elapsed() >= *params.max_seconds) break;

    Sequence child;
    if (rng.uniform01() < params.p_comb) {
      auto [p1, p2] = select_parents(energies, rng);
      child = combine(population[p1], population[p2], rng);
    } else {
      child = population[rng.uniform_int(0, k - 1)];
    }
    child = mutate(child, p_mutate, rng);
    TabuResult refined = tabu_search(child, params.tabu, rng, params.scan_workers);
    if (refined.energy < best_energy) {
      best_energy = refined.energy;
      best = refined.best;
    }
    int victim = static_cast<int>(rng.uniform_int(0, k - 1));
    population[victim] = refined.best;
    energies[victim] = refined.energy;
    if (trace) trace->iters.push_back({iterations, false, refined.energy});
    ++iterations;
  }

  RunResult result;
  result.best = best;
  result.best_energy = best_energy;
  result.merit = merit_factor(n, best_energy);
  result.iterations = iterations;
  result.wall_seconds = elapsed();
  result.seed = seed;
  result.replica_id = replica_id;
  result.reached_target = best_energy <= params.target_energy;
  return result;
}

}  // namespace labsolve
