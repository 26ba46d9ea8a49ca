#include "labsolve/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "labsolve/correlation_state.hpp"
#include "labsolve/skew.hpp"

namespace labsolve {

namespace {

constexpr std::size_t kWitnessCap = 1 << 16;

// Sequence whose free positions 1..n-1 carry the reflected Gray code of
// `index`; position 0 stays +1, halving the walk via the complement symmetry.
Sequence gray_sequence(int n, std::uint64_t index) {
  Sequence s(n);
  std::uint64_t gray = index ^ (index >> 1);
  for (int b = 0; b < n - 1; ++b)
    if ((gray >> b) & 1) s.flip(b + 1);
  return s;
}

struct SearchPart {
  long long best = 0;
  std::set<Sequence> witnesses;
  bool seen = false;
  bool dropped = false;  // witness cap hit at the current best energy
};

void search_range(int n, std::uint64_t lo, std::uint64_t hi, SearchPart& out) {
  CorrelationState state(gray_sequence(n, lo));
  auto consider = [&]() {
    long long e = state.energy();
    if (!out.seen || e < out.best) {
      out.seen = true;
      out.best = e;
      out.witnesses.clear();
      out.dropped = false;
      out.witnesses.insert(canonical(state.pivot()));
    } else if (e == out.best) {
      if (out.witnesses.size() < kWitnessCap)
        out.witnesses.insert(canonical(state.pivot()));
      else
        out.dropped = true;
    }
  };
  consider();
  for (std::uint64_t g = lo + 1; g < hi; ++g) {
    state.apply_flip(std::countr_zero(g) + 1);
    consider();
  }
}

int clamp_workers(int workers, std::uint64_t total) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  return static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
}

}  // namespace

BruteForceResult brute_force_optimum(int n, int workers) {
  if (n < 2 || n > 30)
    throw std::invalid_argument("exhaustive search is limited to 2 <= n <= 30");
  std::uint64_t total = 1ULL << (n - 1);
  workers = clamp_workers(workers, total);

  std::vector<SearchPart> parts(workers);
  if (workers == 1) {
    search_range(n, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t hi = lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
      pool.emplace_back(search_range, n, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : pool) t.join();
  }

  BruteForceResult result;
  std::set<Sequence> merged;
  bool seen = false;
  bool dropped = false;
  for (SearchPart& part : parts) {
    if (!part.seen) continue;
    if (!seen || part.best < result.optimal_energy) {
      seen = true;
      result.optimal_energy = part.best;
      merged = std::move(part.witnesses);
      dropped = part.dropped;
    } else if (part.best == result.optimal_energy) {
      merged.insert(part.witnesses.begin(), part.witnesses.end());
      dropped = dropped || part.dropped;
    }
  }
  if (dropped)
    throw std::runtime_error("optimal witness set exceeded the tracking cap");
  result.witnesses.assign(merged.begin(), merged.end());
  return result;
}

long long enumerate_local_optima(int n, int workers) {
  if (n < 2 || n > 24)
    throw std::invalid_argument("local-optima census is limited to 2 <= n <= 24");
  std::uint64_t total = 1ULL << (n - 1);
  workers = clamp_workers(workers, total);

  auto census_range = [n](std::uint64_t lo, std::uint64_t hi, long long& out) {
    CorrelationState state(gray_sequence(n, lo));
    auto strict_optimum = [&]() {
      long long e = state.energy();
      for (int j = 0; j < n; ++j)
        if (state.neighbor_energy(j) <= e) return false;
      return true;
    };
    long long count = strict_optimum() ? 1 : 0;
    for (std::uint64_t g = lo + 1; g < hi; ++g) {
      state.apply_flip(std::countr_zero(g) + 1);
      if (strict_optimum()) ++count;
    }
    out = count;
  };

  std::vector<long long> counts(workers, 0);
  if (workers == 1) {
    census_range(0, total, counts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t hi = lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
      pool.emplace_back(census_range, lo, hi, std::ref(counts[w]));
    }
    for (auto& t : pool) t.join();
  }

  long long half = 0;
  for (long long c : counts) half += c;
  return 2 * half;  // the complement half mirrors every optimum
}

std::vector<TableEntry> read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  std::vector<TableEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    TableEntry entry;
    if (!(fields >> entry.n >> entry.hex >> entry.energy >> entry.merit >>
          entry.deviation))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 'n hex energy merit deviation'");
    entries.push_back(std::move(entry));
  }
  return entries;
}

VerifyReport verify_published(const std::vector<TableEntry>& entries,
                              std::uint64_t deviation_budget) {
  VerifyReport report;
  report.all_pass = true;
  for (const TableEntry& expected : entries) {
    VerifyEntry check;
    check.expected = expected;
    try {
      Sequence s = decode_hex(expected.hex, expected.n);
      check.energy = energy(s);
      check.merit = merit_factor(expected.n, check.energy);
      DeviationResult dev = deviation(s, deviation_budget);
      check.deviation = dev.value;
      check.budget_exceeded = dev.budget_exceeded;
      check.energy_ok = check.energy == expected.energy;
      check.merit_ok = std::abs(check.merit - expected.merit) <= 0.005;
      check.deviation_ok =
          !dev.budget_exceeded && check.deviation == expected.deviation;
    } catch (const std::exception& e) {
      check.error = e.what();
    }
    report.all_pass = report.all_pass && check.pass();
    report.entries.push_back(std::move(check));
  }
  return report;
}

}  // namespace labsolve
