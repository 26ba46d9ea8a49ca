#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "labsolve/memetic.hpp"

namespace labsolve {

struct ParallelConfig {
  int n = 0;
  int replicas = 1;
  std::uint64_t base_seed = 0;  // replica r runs with seed base_seed + r
  MemeticParams memetic;
  bool run_threaded = true;  // false: run replicas one after another
};

// State shared by all replicas of one run: the termination flag each replica
// polls once per memetic iteration, and the best published result.
class SharedState {
 public:
  const std::atomic<bool>& flag() const { return stop_; }
  bool stop_requested() const { return stop_.load(std::memory_order_acquire); }
  void request_stop() { stop_.store(true, std::memory_order_release); }

  // Accepts only strictly lower energy, so the first publisher keeps a tie.
  // Returns whether the record was taken.
  bool publish(const RunResult& result);
  std::optional<RunResult> best() const;

 private:
  std::atomic<bool> stop_{false};
  mutable std::mutex mutex_;
  std::optional<RunResult> best_;
};

struct ReplicaReport {
  bool collect_traces = false;        // set before the run to fill `traces`
  std::vector<RunResult> results;     // indexed by replica id
  std::vector<MemeticTrace> traces;
};

// Runs cfg.replicas independent memetic searches against one shared state and
// returns the best result. A replica that reaches the target raises the stop
// flag; a replica that throws also raises it, and the first exception is
// rethrown after all replicas have finished.
RunResult run_replicas(const ParallelConfig& cfg,
                       ReplicaReport* report = nullptr);

// Smallest multiple of 32 strictly greater than n.
int suggested_scan_workers(int n);

// hardware_units * min(max_per_unit, max_workers_per_unit / workers_per_replica).
long long suggested_replicas(long long hardware_units, long long max_per_unit,
                             long long max_workers_per_unit,
                             long long workers_per_replica);

// Bytes of state one replica keeps resident for population K and length n:
// packed population + packed product table + correlation vector + two
// sequence buffers.
std::size_t shared_footprint(int n, int population);

}  // namespace labsolve
