#include "labsolve/sequence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace labsolve {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

constexpr char kHexDigits[] = "0123456789ABCDEF";

}  // namespace

Sequence::Sequence(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("sequence length must be nonnegative");
  words_.assign((static_cast<std::size_t>(n) + 63) / 64, 0);
}

Sequence Sequence::random(int n, Rng& rng) {
  Sequence s(n);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = rng.bits64();
  if (!s.words_.empty()) s.words_.back() &= s.tail_mask();
  return s;
}

std::uint64_t Sequence::tail_mask() const {
  int rem = n_ % 64;
  return rem == 0 ? ~0ULL : (1ULL << rem) - 1;
}

void Sequence::check_pos(int pos) const {
  if (pos < 0 || pos >= n_) throw std::out_of_range("sequence position");
}

bool Sequence::bit(int pos) const {
  check_pos(pos);
  return (words_[pos >> 6] >> (pos & 63)) & 1;
}

void Sequence::set_bit(int pos, bool value) {
  check_pos(pos);
  std::uint64_t mask = 1ULL << (pos & 63);
  if (value)
    words_[pos >> 6] |= mask;
  else
    words_[pos >> 6] &= ~mask;
}

void Sequence::set_spin(int pos, int spin) {
  if (spin != 1 && spin != -1) throw std::invalid_argument("spin must be +1 or -1");
  set_bit(pos, spin < 0);
}

void Sequence::flip(int pos) {
  check_pos(pos);
  words_[pos >> 6] ^= 1ULL << (pos & 63);
}

void Sequence::set_word(int idx, std::uint64_t value) {
  words_.at(idx) = value;
  if (idx + 1 == static_cast<int>(words_.size())) words_[idx] &= tail_mask();
}

bool Sequence::operator==(const Sequence& other) const {
  return n_ == other.n_ && words_ == other.words_;
}

bool Sequence::operator<(const Sequence& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff) {
      // Lowest differing bit is the earliest position; 0 there sorts first.
      return (words_[w] & (diff & -diff)) == 0;
    }
  }
  return false;
}

Sequence decode_hex(const std::string& hex, int n) {
  if (n < 1) throw std::invalid_argument("decode_hex: length must be positive");
  std::size_t want = (static_cast<std::size_t>(n) + 3) / 4;
  if (hex.size() != want)
    throw std::invalid_argument("decode_hex: expected " + std::to_string(want) +
                                " digits for length " + std::to_string(n) +
                                ", got " + std::to_string(hex.size()));
  Sequence s(n);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    int v = hex_value(hex[d]);
    if (v < 0)
      throw std::invalid_argument(std::string("decode_hex: invalid digit '") +
                                  hex[d] + "'");
    for (int b = 0; b < 4; ++b) {
      int pos = static_cast<int>(d) * 4 + b;
      bool bit = (v >> (3 - b)) & 1;  // digit MSB is the earliest position
      if (pos >= n) {
        if (bit)
          throw std::invalid_argument("decode_hex: nonzero padding bit");
        continue;
      }
      s.set_bit(pos, bit);
    }
  }
  return s;
}

std::string encode_hex(const Sequence& s) {
  if (s.size() < 1) throw std::invalid_argument("encode_hex: empty sequence");
  std::string out((static_cast<std::size_t>(s.size()) + 3) / 4, '0');
  for (std::size_t d = 0; d < out.size(); ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      int pos = static_cast<int>(d) * 4 + b;
      if (pos < s.size() && s.bit(pos)) v |= 1 << (3 - b);
    }
    out[d] = kHexDigits[v];
  }
  return out;
}

long long autocorrelation(const Sequence& s, int k) {
  int n = s.size();
  if (k < 1 || k > n - 1) throw std::out_of_range("autocorrelation lag");
  long long sum = 0;
  for (int i = 0; i + k < n; ++i) sum += s.spin(i) * s.spin(i + k);
  return sum;
}

long long energy(const Sequence& s) {
  int n = s.size();
  if (n < 2) throw std::invalid_argument("energy needs length >= 2");
  long long e = 0;
  for (int k = 1; k < n; ++k) {
    long long c = autocorrelation(s, k);
    e += c * c;
  }
  return e;
}

double merit_factor(int n, long long energy_value) {
  if (energy_value == 0) throw std::domain_error("merit factor of zero energy");
  return static_cast<double>(n) * static_cast<double>(n) /
         (2.0 * static_cast<double>(energy_value));
}

double merit_factor(const Sequence& s) { return merit_factor(s.size(), energy(s)); }

Sequence complement(const Sequence& s) {
  Sequence out = s;
  for (int w = 0; w < out.word_count(); ++w) out.set_word(w, ~out.word(w));
  return out;
}

Sequence reversed(const Sequence& s) {
  Sequence out(s.size());
  for (int i = 0; i < s.size(); ++i) out.set_bit(i, s.bit(s.size() - 1 - i));
  return out;
}

Sequence canonical(const Sequence& s) {
  Sequence best = s;
  for (const Sequence& cand :
       {complement(s), reversed(s), complement(reversed(s))}) {
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace labsolve
