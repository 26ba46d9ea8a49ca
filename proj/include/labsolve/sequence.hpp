#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labsolve/rng.hpp"

namespace labsolve {

// Spin sequence of length n, spins in {-1,+1}, stored one bit per spin.
// Bit value 0 encodes spin +1 and bit value 1 encodes spin -1; positions are
// 0-based. Padding bits past position n-1 are always zero, so whole-word
// comparison and hashing are well defined.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(int n);  // all spins +1

  static Sequence all_plus(int n) { return Sequence(n); }
  static Sequence random(int n, Rng& rng);

  int size() const { return n_; }
  int word_count() const { return static_cast<int>(words_.size()); }

  bool bit(int pos) const;
  int spin(int pos) const { return bit(pos) ? -1 : +1; }
  void set_bit(int pos, bool value);
  void set_spin(int pos, int spin);  // spin must be +1 or -1
  void flip(int pos);

  std::uint64_t word(int idx) const { return words_[idx]; }
  // Stores a whole word; padding bits in the last word are cleared.
  void set_word(int idx, std::uint64_t value);

  bool operator==(const Sequence& other) const;
  bool operator!=(const Sequence& other) const { return !(*this == other); }
  // Lexicographic on the bit pattern, position 0 most significant.
  bool operator<(const Sequence& other) const;

 private:
  void check_pos(int pos) const;
  std::uint64_t tail_mask() const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Hex codec: uppercase, exactly ceil(n/4) digits, first digit carries
// positions 0..3 with position 0 in the digit's most significant bit, and so
// on left to right; unused bits in the final digit pad with zero.
Sequence decode_hex(const std::string& hex, int n);
std::string encode_hex(const Sequence& s);

// Aperiodic autocorrelation at lag k, 1 <= k <= n-1.
long long autocorrelation(const Sequence& s, int k);
// Sum of squared autocorrelations over all lags; n >= 2.
long long energy(const Sequence& s);
// n^2 / (2 E); E must be nonzero.
double merit_factor(const Sequence& s);
double merit_factor(int n, long long energy_value);

// Energy-preserving transforms and the canonical representative (the
// lexicographic minimum of the sequence, its complement, its reversal, and
// its reversed complement).
Sequence complement(const Sequence& s);
Sequence reversed(const Sequence& s);
Sequence canonical(const Sequence& s);

}  // namespace labsolve
