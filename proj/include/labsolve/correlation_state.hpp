#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "labsolve/rng.hpp"
#include "labsolve/sequence.hpp"

namespace labsolve {

// Incremental evaluation state for one pivot sequence: a bit-packed
// triangular table of the pairwise products s_i * s_{i+k}, the correlation
// vector C_k, and the cached energy. A single-flip neighbor energy is an O(n)
// query and a flip commits in O(n); rebuilding from scratch is O(n^2).
class CorrelationState {
 public:
  explicit CorrelationState(const Sequence& s);

  int size() const { return n_; }
  const Sequence& pivot() const { return pivot_; }
  long long energy() const { return energy_; }

  // C_k for 1 <= k <= n-1.
  long long correlation(int k) const;
  // Sign (+1/-1) of the stored product s_i * s_{i+k}; 0 <= i < n-k.
  int product(int k, int i) const;
  // Bytes held by the packed product table: ceil(n(n-1)/2 / 8).
  std::size_t table_bytes() const { return table_.size(); }

  // Energy of the pivot with position j flipped; the state is not modified.
  // `touches`, when given, is incremented once per table entry visited.
  long long neighbor_energy(int j, std::uint64_t* touches = nullptr) const;
  // Flips position j, updating table, correlations and energy in place.
  void apply_flip(int j, std::uint64_t* touches = nullptr);

 private:
  int read(std::size_t bit_index) const;
  void toggle(std::size_t bit_index);

  int n_ = 0;
  Sequence pivot_;
  std::vector<std::uint8_t> table_;  // row k at offset sum_{j<k}(n-j), bit i = product sign
  std::vector<std::int32_t> corr_;
  long long energy_ = 0;
};

struct ScanResult {
  int position = -1;
  long long energy = 0;
  bool fallback = false;  // no admissible position existed; drawn uniformly
};

// Argmin over admissible positions of the single-flip neighbor energy.
// The full tie set is materialized and resolved with one uniform draw, so the
// outcome is identical no matter how the scan is split across workers.
// With no admissible position: uniform draw over all positions when
// allow_fallback, otherwise throws std::runtime_error.
ScanResult scan_neighborhood(const CorrelationState& state,
                             const std::function<bool(int)>& admissible,
                             Rng& rng, int workers = 1,
                             bool allow_fallback = true);

}  // namespace labsolve
