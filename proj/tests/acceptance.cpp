// Release gate: every criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "labsolve/correlation_state.hpp"
#include "labsolve/fit.hpp"
#include "labsolve/memetic.hpp"
#include "labsolve/oracle.hpp"
#include "labsolve/parallel.hpp"
#include "labsolve/skew.hpp"
#include "oracle_util.hpp"

using namespace labsolve;
using labsolve::testing::naive_energy;

namespace {

const char* kTablePath = LABS_DATA_DIR "/published_sequences.txt";

std::map<int, long long>& optimum_cache() {
  static std::map<int, long long> cache;
  return cache;
}

long long proven_optimum(int n) {
  auto& cache = optimum_cache();
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, brute_force_optimum(n, 8).optimal_energy).first;
  return it->second;
}

// 1. The published table decodes to the listed energies (exactly) and merit
//    factors (+-0.005) in under a second.
bool published_energies(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<TableEntry> entries = read_table_file(kTablePath);
  if (entries.size() != 17) {
    detail = "expected 17 table rows";
    return false;
  }
  int bad = 0;
  for (const TableEntry& row : entries) {
    Sequence s = decode_hex(row.hex, row.n);
    long long e = energy(s);
    double mf = merit_factor(row.n, e);
    if (e != row.energy || std::abs(mf - row.merit) > 0.005) ++bad;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  std::ostringstream out;
  out << "17 rows, " << bad << " mismatches, " << dt << " s";
  detail = out.str();
  return bad == 0 && dt < 1.0;
}

// 2. Deviation from skew-symmetry matches the published column exactly on
//    every even-length row.
bool even_deviations(std::string& detail) {
  int bad = 0, rows = 0;
  std::ostringstream out;
  for (const TableEntry& row : read_table_file(kTablePath)) {
    if (row.n % 2 != 0) continue;
    ++rows;
    int d = deviation(decode_hex(row.hex, row.n)).value;
    if (d != row.deviation) {
      ++bad;
      out << " n=" << row.n << " got " << d << " want " << row.deviation;
    }
  }
  std::ostringstream head;
  head << rows << " even rows, " << bad << " mismatches" << out.str();
  detail = head.str();
  return rows == 12 && bad == 0;
}

// 3. Odd-length deviations against the published (15, 17, 17, 19, 20); the
//    scan-rotations reading reproduces them, the single-edit reading does not
//    (documented in the README), so agreement here is the pass condition.
bool odd_deviations(std::string& detail) {
  std::vector<int> got, want;
  for (const TableEntry& row : read_table_file(kTablePath)) {
    if (row.n % 2 == 0) continue;
    got.push_back(deviation(decode_hex(row.hex, row.n)).value);
    want.push_back(row.deviation);
  }
  std::ostringstream out;
  out << "computed";
  for (int d : got) out << ' ' << d;
  out << " vs published";
  for (int d : want) out << ' ' << d;
  detail = out.str();
  return got == want && got.size() == 5;
}

// 4. Incremental evaluation is exactly equivalent to naive recomputation:
//    500 random interleaved query/flip traces, plus full gray-code
//    enumerations with a per-step check.
bool incremental_equivalence(std::string& detail) {
  Rng rng(20240817);
  long long checks = 0;
  for (int trace = 0; trace < 500; ++trace) {
    int n = 8 + static_cast<int>(rng.uniform_int(0, 12));
    Sequence s = Sequence::random(n, rng);
    CorrelationState st(s);
    for (int step = 0; step < 60; ++step) {
      int j = static_cast<int>(rng.uniform_int(0, n - 1));
      Sequence flipped = st.pivot();
      flipped.flip(j);
      long long naive = naive_energy(flipped);
      if (st.neighbor_energy(j) != naive) {
        detail = "neighbor query diverged";
        return false;
      }
      if (rng.uniform01() < 0.5) {
        st.apply_flip(j);
        if (st.energy() != naive) {
          detail = "flip update diverged";
          return false;
        }
      }
      ++checks;
    }
  }
  for (int n = 4; n <= 16; ++n) {
    Sequence s(n);
    CorrelationState st(s);
    if (st.energy() != naive_energy(s)) {
      detail = "enumeration start diverged";
      return false;
    }
    for (std::uint64_t g = 1; g < (1ULL << (n - 1)); ++g) {
      std::uint64_t v = g;
      int pos = 1;
      while (!(v & 1)) {
        v >>= 1;
        ++pos;
      }
      st.apply_flip(pos);
      if (st.energy() != naive_energy(st.pivot())) {
        detail = "enumeration diverged at n=" + std::to_string(n);
        return false;
      }
      ++checks;
    }
  }
  detail = std::to_string(checks) + " incremental/naive comparisons";
  return true;
}

// 5. The solver reaches exhaustively proven optima: one replica for
//    n = 5..24, eight replicas for n = 25..30.
bool reaches_proven_optima(std::string& detail) {
  for (int n = 5; n <= 24; ++n) {
    MemeticParams params;
    params.target_energy = proven_optimum(n);
    params.max_seconds = 60.0;
    RunResult res = memetic_tabu(n, params, 1000 + n);
    if (!res.reached_target || naive_energy(res.best) != params.target_energy) {
      detail = "n=" + std::to_string(n) + " missed optimum " +
               std::to_string(params.target_energy);
      return false;
    }
  }
  for (int n = 25; n <= 30; ++n) {
    ParallelConfig cfg;
    cfg.n = n;
    cfg.replicas = 8;
    cfg.base_seed = 2000 + n;
    cfg.memetic.target_energy = proven_optimum(n);
    cfg.memetic.max_seconds = 600.0;
    RunResult res = run_replicas(cfg);
    if (!res.reached_target ||
        naive_energy(res.best) != cfg.memetic.target_energy) {
      detail = "n=" + std::to_string(n) + " missed optimum " +
               std::to_string(cfg.memetic.target_energy);
      return false;
    }
  }
  detail = "optima reached for n = 5..30";
  return true;
}

// 6. Exact symmetries hold on random inputs: complement/reversal preserve
//    energy, and constructed skew-symmetric sequences kill odd lags.
bool symmetry_invariance(std::string& detail) {
  Rng rng(424247);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 8 + static_cast<int>(rng.uniform_int(0, 120));
    Sequence s = Sequence::random(n, rng);
    long long e = energy(s);
    if (energy(complement(s)) != e || energy(reversed(s)) != e ||
        energy(complement(reversed(s))) != e) {
      detail = "symmetry violated at n=" + std::to_string(n);
      return false;
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    int n = 9 + 2 * static_cast<int>(rng.uniform_int(0, 59));
    Sequence s = Sequence::random(n, rng);
    int m = (n + 1) / 2, c = m - 1;
    for (int i = 1; i < m; ++i)
      s.set_spin(c + i, ((i % 2 == 1) ? -1 : 1) * s.spin(c - i));
    if (n_non_skew(s) != 0) {
      detail = "constructed sequence not skew-symmetric";
      return false;
    }
    for (int k = 1; k < n; k += 2)
      if (autocorrelation(s, k) != 0) {
        detail = "odd-lag correlation nonzero at n=" + std::to_string(n);
        return false;
      }
  }
  detail = "1000 symmetry orbits, 200 skew-symmetric constructions";
  return true;
}

// 7. Replica semantics: one replica is bit-identical to the bare search, and
//    a racing pack terminates promptly once anybody reaches the target.
bool replica_semantics(std::string& detail) {
  long long target16 = proven_optimum(16);
  MemeticParams params;
  params.target_energy = target16;
  params.max_seconds = 120.0;
  RunResult bare = memetic_tabu(16, params, 333);
  ParallelConfig single;
  single.n = 16;
  single.replicas = 1;
  single.base_seed = 333;
  single.memetic = params;
  RunResult wrapped = run_replicas(single);
  if (!(wrapped.best == bare.best) || wrapped.best_energy != bare.best_energy ||
      wrapped.iterations != bare.iterations) {
    detail = "one replica diverged from the bare search";
    return false;
  }

  ParallelConfig cfg;
  cfg.n = 20;
  cfg.replicas = 6;
  cfg.base_seed = 444000;
  cfg.memetic.target_energy = proven_optimum(20);
  cfg.memetic.max_seconds = 300.0;
  ReplicaReport report;
  report.collect_traces = true;
  RunResult res = run_replicas(cfg, &report);
  if (!res.reached_target || res.best_energy != cfg.memetic.target_energy) {
    detail = "pack missed a reachable target";
    return false;
  }
  for (int r = 0; r < cfg.replicas; ++r) {
    const MemeticTrace& trace = report.traces[r];
    for (std::size_t i = 0; i + 1 < trace.iters.size(); ++i)
      if (trace.iters[i].stop_seen) {
        detail = "stop flag recorded before the final iteration";
        return false;
      }
    bool stopped_early =
        !trace.iters.empty() && trace.iters.back().stop_seen;
    if (!report.results[r].reached_target && !stopped_early) {
      detail = "replica " + std::to_string(r) +
               " neither reached the target nor observed the stop flag";
      return false;
    }
  }
  detail = "1-replica identity and 6-replica race hold";
  return true;
}

// 8. Time-to-target scaling: an exact synthetic exponent is recovered to
//    1e-9, and the measured n = 20..30 exponent lands in [1.10, 1.50].
bool scaling_fit(std::string& detail) {
  std::vector<TtsSample> exact;
  for (int n = 20; n <= 40; ++n)
    exact.push_back({n, 0, 3.0e-7 * std::pow(1.34, n), true, 0, 1});
  FitResult syn = fit_exponential(exact, 20, 40);
  if (std::abs(syn.b - 1.34) > 1e-9 || std::abs(syn.a - 3.0e-7) > 1e-9 * 3.0e-7) {
    detail = "synthetic exponent not recovered";
    return false;
  }

  BenchPlan plan;
  for (int n = 20; n <= 30; ++n) {
    plan.n_values.push_back(n);
    plan.targets[n] = proven_optimum(n);
  }
  plan.repetitions = 5;
  plan.base.replicas = 4;
  plan.base.base_seed = 777000;
  plan.base.memetic.max_seconds = 120.0;
  std::vector<TtsSample> samples = run_tts(plan);
  int censored = 0;
  for (const TtsSample& s : samples) censored += !s.reached_target;
  FitResult fit = fit_exponential(samples, 20, 30);
  std::ostringstream out;
  out << "b = " << fit.b << " (95% CI " << fit.b_ci.first << ".."
      << fit.b_ci.second << "), " << fit.points_used << " medians, " << censored
      << " censored";
  detail = out.str();
  return censored == 0 && fit.b >= 1.10 && fit.b <= 1.50;
}

// 9. The energy landscape gets more rugged: strict local optima counts grow
//    from n = 12 to 15 to 18.
bool landscape_ruggedness(std::string& detail) {
  long long c12 = enumerate_local_optima(12, 8);
  long long c15 = enumerate_local_optima(15, 8);
  long long c18 = enumerate_local_optima(18, 8);
  std::ostringstream out;
  out << "counts " << c12 << " < " << c15 << " < " << c18;
  detail = out.str();
  return c12 > 0 && c12 < c15 && c15 < c18;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "published energies and merit factors", published_energies},
      {2, "even-length deviations exact", even_deviations},
      {3, "odd-length deviations as published", odd_deviations},
      {4, "incremental evaluation equals naive", incremental_equivalence},
      {5, "proven optima reached", reaches_proven_optima},
      {6, "symmetry invariance", symmetry_invariance},
      {7, "replica semantics", replica_semantics},
      {8, "time-to-target scaling fit", scaling_fit},
      {9, "landscape ruggedness census", landscape_ruggedness},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("%s  C%d %s (%s) [%.2f s]\n", ok ? "PASS" : "FAIL", c.id,
                c.title, detail.c_str(), dt);
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
