#include "labsolve/parallel.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace labsolve {

bool SharedState::publish(const RunResult& result) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (best_ && best_->best_energy <= result.best_energy) return false;
  best_ = result;
  return true;
}

std::optional<RunResult> SharedState::best() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return best_;
}

RunResult run_replicas(const ParallelConfig& cfg, ReplicaReport* report) {
  if (cfg.n < 2) throw std::invalid_argument("run needs length >= 2");
  if (cfg.replicas < 1) throw std::invalid_argument("replicas must be >= 1");

  SharedState shared;
  if (report) {
    report->results.assign(cfg.replicas, RunResult{});
    report->traces.assign(report->collect_traces ? cfg.replicas : 0,
                          MemeticTrace{});
  }
  std::vector<std::exception_ptr> errors(cfg.replicas);

  auto body = [&](int r) {
    try {
      MemeticTrace* trace =
          report && report->collect_traces ? &report->traces[r] : nullptr;
      RunResult result = memetic_tabu(cfg.n, cfg.memetic, cfg.base_seed + r,
                                      &shared.flag(), trace, r);
      if (result.reached_target) shared.request_stop();
      shared.publish(result);
      if (report) report->results[r] = result;
    } catch (...) {
      errors[r] = std::current_exception();
      shared.request_stop();  // a failed replica takes the run down promptly
    }
  };

  if (!cfg.run_threaded || cfg.replicas == 1) {
    for (int r = 0; r < cfg.replicas; ++r) body(r);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.replicas);
    for (int r = 0; r < cfg.replicas; ++r) pool.emplace_back(body, r);
    for (auto& t : pool) t.join();
  }

  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return *shared.best();
}

int suggested_scan_workers(int n) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  return (n / 32 + 1) * 32;
}

long long suggested_replicas(long long hardware_units, long long max_per_unit,
                             long long max_workers_per_unit,
                             long long workers_per_replica) {
  if (hardware_units < 1 || max_per_unit < 1 || max_workers_per_unit < 1 ||
      workers_per_replica < 1)
    throw std::invalid_argument("replica sizing arguments must be positive");
  long long fit = max_workers_per_unit / workers_per_replica;
  if (fit < 1)
    throw std::invalid_argument("a replica's workers exceed one unit's budget");
  return hardware_units * std::min(max_per_unit, fit);
}

std::size_t shared_footprint(int n, int population) {
  if (n < 2) throw std::invalid_argument("length must be >= 2");
  if (population < 1) throw std::invalid_argument("population must be >= 1");
  std::size_t nn = static_cast<std::size_t>(n);
  std::size_t pop_bits = static_cast<std::size_t>(population) * nn;
  std::size_t table_bits = nn * (nn - 1) / 2;
  return (pop_bits + 7) / 8     // packed population
         + (table_bits + 7) / 8  // packed product table
         + 2 * (nn - 1)          // correlation vector, 16-bit lanes
         + 2 * nn;               // pivot and best sequence, one byte per spin
}

}  // namespace labsolve
