#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labsolve/sequence.hpp"

namespace labsolve {

struct BruteForceResult {
  long long optimal_energy = 0;
  // Canonical representatives of every optimal sequence, deduplicated and
  // sorted; covers the full space even though the walk fixes s_0 = +1.
  std::vector<Sequence> witnesses;
};

// Exhaustive ground truth over all 2^n sequences, walked in Gray-code order
// with incremental energy updates. Hard limit n <= 30.
BruteForceResult brute_force_optimum(int n, int workers = 1);

// Number of strict local optima of the single-flip neighborhood over the full
// space (every neighbor strictly worse). Hard limit n <= 24.
long long enumerate_local_optima(int n, int workers = 1);

struct TableEntry {
  int n = 0;
  std::string hex;
  long long energy = 0;
  double merit = 0.0;
  int deviation = 0;
};

// Whitespace-separated "n hex energy merit deviation" per line; blank lines
// and lines starting with '#' are skipped.
std::vector<TableEntry> read_table_file(const std::string& path);

struct VerifyEntry {
  TableEntry expected;
  long long energy = -1;
  double merit = 0.0;
  int deviation = -1;
  bool energy_ok = false;
  bool merit_ok = false;      // |computed - listed| <= 0.005
  bool deviation_ok = false;
  bool budget_exceeded = false;
  std::string error;  // decode or evaluation failure; entry fails, run continues

  bool pass() const {
    return error.empty() && energy_ok && merit_ok && deviation_ok;
  }
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool all_pass = false;
};

VerifyReport verify_published(const std::vector<TableEntry>& entries,
                              std::uint64_t deviation_budget = 0);

}  // namespace labsolve
