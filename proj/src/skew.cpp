#include "labsolve/skew.hpp"

#include <stdexcept>
#include <vector>

namespace labsolve {

namespace {

std::vector<signed char> to_spins(const Sequence& s) {
  std::vector<signed char> out(s.size());
  for (int i = 0; i < s.size(); ++i)
    out[i] = static_cast<signed char>(s.spin(i));
  return out;
}

// Violating mirror pairs of an odd-length buffer.
int pair_count(const signed char* s, int len) {
  int m = (len + 1) / 2;
  int c = m - 1;
  int bad = 0;
  for (int i = 1; i < m; ++i) {
    int sign = (i & 1) ? -1 : 1;
    if (s[c + i] != sign * s[c - i]) ++bad;
  }
  return bad;
}

// Same, with physical index `skip` treated as deleted (len must be even).
int pair_count_skipping(const signed char* s, int len, int skip) {
  int logical = len - 1;
  int m = (logical + 1) / 2;
  int c = m - 1;
  int bad = 0;
  auto at = [&](int j) { return s[j < skip ? j : j + 1]; };
  for (int i = 1; i < m; ++i) {
    int sign = (i & 1) ? -1 : 1;
    if (at(c + i) != sign * at(c - i)) ++bad;
  }
  return bad;
}

std::vector<signed char> rotated(const std::vector<signed char>& base, int r) {
  int n = static_cast<int>(base.size());
  std::vector<signed char> out(n);
  for (int i = 0; i < n; ++i) out[i] = base[(i + r) % n];
  return out;
}

struct Budget {
  std::uint64_t limit;  // 0 = unlimited
  std::uint64_t used = 0;
  bool exhausted = false;

  // True when one more evaluation may be charged.
  bool charge() {
    if (limit && used >= limit) {
      exhausted = true;
      return false;
    }
    ++used;
    return true;
  }
};

void consider(DeviationResult& res, int value) {
  if (res.value < 0 || value < res.value) res.value = value;
}

}  // namespace

Sequence rot(const Sequence& s, int count) {
  int n = s.size();
  if (n < 1) throw std::invalid_argument("rot needs a nonempty sequence");
  if (count < 0 || count >= n) throw std::out_of_range("rotation count");
  Sequence out(n);
  for (int i = 0; i < n; ++i) out.set_bit(i, s.bit((i + count) % n));
  return out;
}

Sequence ins(const Sequence& s, int gap, int spin) {
  int n = s.size();
  if (gap < 0 || gap > n) throw std::out_of_range("insertion gap");
  if (spin != 1 && spin != -1) throw std::invalid_argument("spin must be +1 or -1");
  Sequence out(n + 1);
  for (int i = 0; i < gap; ++i) out.set_bit(i, s.bit(i));
  out.set_spin(gap, spin);
  for (int i = gap; i < n; ++i) out.set_bit(i + 1, s.bit(i));
  return out;
}

Sequence del(const Sequence& s, int pos) {
  int n = s.size();
  if (n < 2) throw std::invalid_argument("del needs length >= 2");
  if (pos < 0 || pos >= n) throw std::out_of_range("deletion position");
  Sequence out(n - 1);
  for (int i = 0; i < pos; ++i) out.set_bit(i, s.bit(i));
  for (int i = pos + 1; i < n; ++i) out.set_bit(i - 1, s.bit(i));
  return out;
}

int n_non_skew(const Sequence& s) {
  int n = s.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("pair count needs odd length >= 3");
  std::vector<signed char> spins = to_spins(s);
  return pair_count(spins.data(), n);
}

DeviationResult deviation(const Sequence& s, std::uint64_t budget) {
  int n = s.size();
  if (n < 3) throw std::invalid_argument("deviation needs length >= 3");
  std::vector<signed char> base = to_spins(s);
  DeviationResult res;
  Budget bank{budget};
  bool odd = n % 2 != 0;

  for (int r = 0; r < n && res.value != 0 && !bank.exhausted; ++r) {
    std::vector<signed char> cur = rotated(base, r);
    if (odd) {
      if (!bank.charge()) break;
      consider(res, pair_count(cur.data(), n));
    } else {
      for (int j = 0; j < n && res.value != 0; ++j) {
        if (!bank.charge()) break;
        consider(res, pair_count_skipping(cur.data(), n, j));
      }
    }
  }

  res.budget_exceeded = bank.exhausted;
  res.evaluations = bank.used;
  return res;
}

DeviationResult deviation_with_edits(const Sequence& s, std::uint64_t budget) {
  int n = s.size();
  if (n < 3) throw std::invalid_argument("deviation needs length >= 3");
  std::vector<signed char> base = to_spins(s);
  DeviationResult res;
  Budget bank{budget};
  bool odd = n % 2 != 0;
  std::vector<signed char> grown(n + 1);

  auto insert_into_grown = [&](const std::vector<signed char>& cur, int gap,
                               signed char spin) {
    for (int i = 0; i < gap; ++i) grown[i] = cur[i];
    grown[gap] = spin;
    for (int i = gap; i < n; ++i) grown[i + 1] = cur[i];
  };

  for (int r = 0; r < n && res.value != 0 && !bank.exhausted; ++r) {
    std::vector<signed char> cur = rotated(base, r);
    if (odd) {
      if (!bank.charge()) break;
      consider(res, pair_count(cur.data(), n));
      for (int gap = 0; gap <= n && res.value != 0 && !bank.exhausted; ++gap) {
        for (signed char spin : {static_cast<signed char>(1),
                                 static_cast<signed char>(-1)}) {
          insert_into_grown(cur, gap, spin);
          for (int j = 0; j <= n && res.value != 0; ++j) {
            if (!bank.charge()) break;
            consider(res, pair_count_skipping(grown.data(), n + 1, j));
          }
          if (res.value == 0 || bank.exhausted) break;
        }
      }
    } else {
      for (int j = 0; j < n && res.value != 0; ++j) {
        if (!bank.charge()) break;
        consider(res, pair_count_skipping(cur.data(), n, j));
      }
      for (int gap = 0; gap <= n && res.value != 0 && !bank.exhausted; ++gap) {
        for (signed char spin : {static_cast<signed char>(1),
                                 static_cast<signed char>(-1)}) {
          if (!bank.charge()) break;
          insert_into_grown(cur, gap, spin);
          consider(res, pair_count(grown.data(), n + 1));
        }
      }
    }
  }

  res.budget_exceeded = bank.exhausted;
  res.evaluations = bank.used;
  return res;
}

}  // namespace labsolve
