#include "labsolve/correlation_state.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

namespace labsolve {

CorrelationState::CorrelationState(const Sequence& s)
    : n_(s.size()), pivot_(s) {
  if (n_ < 2) throw std::invalid_argument("correlation state needs length >= 2");
  std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  table_.assign((pairs + 7) / 8, 0);
  corr_.assign(n_ - 1, 0);
  std::size_t off = 0;
  for (int k = 1; k < n_; ++k) {
    std::int32_t c = 0;
    for (int i = 0; i + k < n_; ++i) {
      int p = pivot_.spin(i) * pivot_.spin(i + k);
      if (p < 0) table_[(off + i) >> 3] |= 1u << ((off + i) & 7);
      c += p;
    }
    corr_[k - 1] = c;
    energy_ += static_cast<long long>(c) * c;
    off += n_ - k;
  }
}

long long CorrelationState::correlation(int k) const {
  if (k < 1 || k > n_ - 1) throw std::out_of_range("correlation lag");
  return corr_[k - 1];
}

int CorrelationState::read(std::size_t bit_index) const {
  return (table_[bit_index >> 3] >> (bit_index & 7)) & 1 ? -1 : +1;
}

void CorrelationState::toggle(std::size_t bit_index) {
  table_[bit_index >> 3] ^= 1u << (bit_index & 7);
}

int CorrelationState::product(int k, int i) const {
  if (k < 1 || k > n_ - 1) throw std::out_of_range("product lag");
  if (i < 0 || i + k >= n_) throw std::out_of_range("product index");
  std::size_t kk = static_cast<std::size_t>(k - 1);
  std::size_t off = kk * n_ - kk * (kk + 1) / 2;
  return read(off + i);
}

long long CorrelationState::neighbor_energy(int j, std::uint64_t* touches) const {
  if (j < 0 || j >= n_) throw std::out_of_range("flip position");
  long long e = energy_;
  std::size_t off = 0;
  for (int k = 1; k < n_; ++k) {
    long long sum = 0;
    if (j - k >= 0) {
      sum += read(off + j - k);
      if (touches) ++*touches;
    }
    if (j + k < n_) {
      sum += read(off + j);
      if (touches) ++*touches;
    }
    if (sum != 0) {
      long long d = -2 * sum;  // flipped products change C_k by d
      e += d * (2 * corr_[k - 1] + d);
    }
    off += n_ - k;
  }
  return e;
}

void CorrelationState::apply_flip(int j, std::uint64_t* touches) {
  if (j < 0 || j >= n_) throw std::out_of_range("flip position");
  long long e = energy_;
  std::size_t off = 0;
  for (int k = 1; k < n_; ++k) {
    long long sum = 0;
    if (j - k >= 0) {
      sum += read(off + j - k);
      toggle(off + j - k);
      if (touches) ++*touches;
    }
    if (j + k < n_) {
      sum += read(off + j);
      toggle(off + j);
      if (touches) ++*touches;
    }
    if (sum != 0) {
      long long d = -2 * sum;
      e += d * (2 * corr_[k - 1] + d);
      corr_[k - 1] += static_cast<std::int32_t>(d);
    }
    off += n_ - k;
  }
  energy_ = e;
  pivot_.flip(j);
}

ScanResult scan_neighborhood(const CorrelationState& state,
                             const std::function<bool(int)>& admissible,
                             Rng& rng, int workers, bool allow_fallback) {
  int n = state.size();
  if (workers < 1) throw std::invalid_argument("scan workers must be >= 1");

  struct Part {
    long long best = 0;
    std::vector<int> ties;
  };

  auto scan_range = [&](int lo, int hi, Part& part) {
    for (int j = lo; j < hi; ++j) {
      if (!admissible(j)) continue;
      long long e = state.neighbor_energy(j);
      if (part.ties.empty() || e < part.best) {
        part.best = e;
        part.ties.assign(1, j);
      } else if (e == part.best) {
        part.ties.push_back(j);
      }
    }
  };

  std::vector<Part> parts;
  if (workers == 1 || n < 2 * workers) {
    parts.resize(1);
    scan_range(0, n, parts[0]);
  } else {
    if (workers > n) workers = n;
    parts.resize(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
      int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
      pool.emplace_back(scan_range, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : pool) t.join();
  }

  // Merge in chunk order: the tie list ends up sorted by position, identical
  // to a single left-to-right pass.
  long long best = 0;
  std::vector<int> ties;
  for (const Part& part : parts) {
    if (part.ties.empty()) continue;
    if (ties.empty() || part.best < best) {
      best = part.best;
      ties = part.ties;
    } else if (part.best == best) {
      ties.insert(ties.end(), part.ties.begin(), part.ties.end());
    }
  }

  if (ties.empty()) {
    if (!allow_fallback)
      throw std::runtime_error("no admissible position in neighborhood scan");
    int pos = static_cast<int>(rng.uniform_int(0, n - 1));
    return {pos, state.neighbor_energy(pos), true};
  }
  int pick = ties.size() == 1
                 ? ties[0]
                 : ties[static_cast<std::size_t>(
                       rng.uniform_int(0, static_cast<long long>(ties.size()) - 1))];
  return {pick, best, false};
}

}  // namespace labsolve
