#pragma once

#include <cstdint>

#include "labsolve/sequence.hpp"

namespace labsolve {

// Cyclic left rotation by `count`: the first `count` elements move to the end.
Sequence rot(const Sequence& s, int count);
// Insertion of `spin` (+1/-1) before position `gap`, 0 <= gap <= n.
Sequence ins(const Sequence& s, int gap, int spin);
// Removal of position `pos`, 0 <= pos < n.
Sequence del(const Sequence& s, int pos);

// Number of mirror pairs of an odd-length sequence (n = 2m-1 >= 3) violating
// s_{m+i} = (-1)^i s_{m-i}, in 1-based terms. Zero iff skew-symmetric, in
// which case every odd-lag autocorrelation vanishes.
int n_non_skew(const Sequence& s);

struct DeviationResult {
  int value = -1;  // best pair count found; -1 if no evaluation completed
  bool budget_exceeded = false;
  std::uint64_t evaluations = 0;  // pair-count evaluations spent
};

// Distance from skew-symmetry as published alongside the long best-known
// sequences: odd lengths minimize the violating-pair count over all
// rotations; even lengths minimize over all rotations composed with all
// single deletions. `budget` caps the number of pair-count evaluations
// (0 = unlimited); when it runs out the result carries budget_exceeded and
// the best bound seen so far instead of a verdict.
DeviationResult deviation(const Sequence& s, std::uint64_t budget = 0);

// Wider single-edit variant: even lengths also minimize over single
// insertions, odd lengths over one insertion composed with one deletion.
// Never exceeds deviation(); kept for analysis because the published tables
// match the narrower metric, not this one.
DeviationResult deviation_with_edits(const Sequence& s,
                                     std::uint64_t budget = 0);

}  // namespace labsolve
