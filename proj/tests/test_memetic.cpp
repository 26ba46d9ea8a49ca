#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <map>
#include <stdexcept>
#include <vector>

#include "labsolve/memetic.hpp"
#include "labsolve/oracle.hpp"
#include "oracle_util.hpp"

using namespace labsolve;
using testing::naive_energy;

TEST_CASE("tournament prefers lower energy") {
  Rng rng(107);
  std::vector<long long> energies{5, 9};
  int zero_picks = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    auto [a, b] = select_parents(energies, rng);
    zero_picks += (a == 0) + (b == 0);
  }
  // One tournament picks index 0 with probability 3/4.
  double rate = static_cast<double>(zero_picks) / (2 * trials);
  CHECK(rate > 0.72);
  CHECK(rate < 0.78);
  CHECK_THROWS_AS(select_parents(std::vector<long long>{1}, rng),
                  std::invalid_argument);
}

TEST_CASE("tied tournaments settle by coin flip") {
  Rng rng(109);
  std::vector<long long> energies(10, 42);
  std::map<int, int> hits;
  const int trials = 30000;
  for (int t = 0; t < trials; ++t) {
    auto [a, b] = select_parents(energies, rng);
    ++hits[a];
    ++hits[b];
  }
  for (int i = 0; i < 10; ++i) {
    CHECK(hits[i] > 2 * trials / 10 - trials / 25);
    CHECK(hits[i] < 2 * trials / 10 + trials / 25);
  }
}

TEST_CASE("uniform crossover") {
  Rng rng(113);
  Sequence plus = Sequence::all_plus(64);
  Sequence minus = complement(plus);
  SUBCASE("identical parents reproduce themselves") {
    Sequence child = combine(plus, plus, rng);
    CHECK(child == plus);
  }
  SUBCASE("agreeing positions are inherited") {
    Sequence p1 = Sequence::random(100, rng);
    Sequence p2 = Sequence::random(100, rng);
    Sequence child = combine(p1, p2, rng);
    for (int i = 0; i < 100; ++i) {
      if (p1.bit(i) == p2.bit(i)) CHECK(child.bit(i) == p1.bit(i));
      else CHECK((child.bit(i) == p1.bit(i) || child.bit(i) == p2.bit(i)));
    }
  }
  SUBCASE("disagreeing positions split evenly") {
    const int trials = 3000;
    long long from_first = 0;
    for (int t = 0; t < trials; ++t) {
      Sequence child = combine(plus, minus, rng);
      for (int i = 0; i < 64; ++i) from_first += child.spin(i) == 1;
    }
    double rate = static_cast<double>(from_first) / (64.0 * trials);
    CHECK(rate > 0.49);
    CHECK(rate < 0.51);
  }
  SUBCASE("length mismatch rejected") {
    CHECK_THROWS_AS(combine(plus, Sequence::all_plus(63), rng),
                    std::invalid_argument);
  }
}

TEST_CASE("mutation") {
  Rng rng(127);
  Sequence base = Sequence::random(100, rng);
  SUBCASE("probability one complements") {
    CHECK(mutate(base, 1.0, rng) == complement(base));
  }
  SUBCASE("expected flip count is n * p") {
    const int trials = 20000;
    long long flips = 0;
    for (int t = 0; t < trials; ++t) {
      Sequence mutated = mutate(base, 0.01, rng);
      for (int i = 0; i < 100; ++i) flips += mutated.bit(i) != base.bit(i);
    }
    double mean = static_cast<double>(flips) / trials;
    CHECK(mean > 0.93);  // Binomial(100, 0.01), expectation 1
    CHECK(mean < 1.07);
  }
  SUBCASE("probability bounds enforced") {
    CHECK_THROWS_AS(mutate(base, 0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(mutate(base, 1.5, rng), std::invalid_argument);
  }
}

TEST_CASE("solves small instances to proven optimality") {
  for (int n : {13, 20}) {
    long long target = brute_force_optimum(n, 4).optimal_energy;
    MemeticParams params;
    params.target_energy = target;
    params.max_seconds = 120.0;
    RunResult res = memetic_tabu(n, params, 1000 + n);
    CHECK(res.reached_target);
    CHECK(res.best_energy == target);
    CHECK(naive_energy(res.best) == target);
    CHECK(res.merit == doctest::Approx(static_cast<double>(n) * n /
                                       (2.0 * static_cast<double>(target))));
    CHECK(res.seed == static_cast<std::uint64_t>(1000 + n));
  }
}

TEST_CASE("an already-satisfied target returns without iterating") {
  MemeticParams params;
  params.target_energy = 1LL << 40;  // any random population clears this
  RunResult res = memetic_tabu(24, params, 5);
  CHECK(res.reached_target);
  CHECK(res.iterations == 0);
}

TEST_CASE("iteration budget cuts the loop") {
  MemeticParams params;
  params.target_energy = 0;  // unreachable for n = 24
  params.max_iterations = 7;
  MemeticTrace trace;
  RunResult res = memetic_tabu(24, params, 6, nullptr, &trace);
  CHECK(!res.reached_target);
  CHECK(res.iterations == 7);
  CHECK(trace.iters.size() == 7);
  for (long long i = 0; i < 7; ++i) {
    CHECK(trace.iters[i].iteration == i);
    CHECK(!trace.iters[i].stop_seen);
    CHECK(trace.iters[i].child_energy > 0);
  }
}

TEST_CASE("time budget cuts the loop") {
  MemeticParams params;
  params.target_energy = 0;
  params.max_seconds = 0.25;
  RunResult res = memetic_tabu(40, params, 7);
  CHECK(!res.reached_target);
  CHECK(res.wall_seconds >= 0.25);
  CHECK(res.wall_seconds < 5.0);
}

TEST_CASE("best-so-far never regresses") {
  MemeticParams params;
  params.target_energy = 0;
  params.max_iterations = 60;
  MemeticTrace trace;
  RunResult res = memetic_tabu(26, params, 8, nullptr, &trace);
  long long floor_seen = trace.iters.front().child_energy;
  for (const MemeticIterRecord& rec : trace.iters)
    floor_seen = std::min(floor_seen, rec.child_energy);
  CHECK(res.best_energy <= floor_seen);
  CHECK(naive_energy(res.best) == res.best_energy);
}

TEST_CASE("stop flag wins over everything else") {
  std::atomic<bool> stop{true};
  MemeticParams params;
  params.target_energy = 0;
  MemeticTrace trace;
  RunResult res = memetic_tabu(30, params, 9, &stop, &trace);
  CHECK(!res.reached_target);
  CHECK(res.iterations == 0);
  REQUIRE(trace.iters.size() == 1);
  CHECK(trace.iters[0].stop_seen);
  CHECK(trace.iters[0].child_energy == -1);
}

TEST_CASE("fixed seed reproduces the run bit for bit") {
  MemeticParams params;
  params.target_energy = 0;
  params.max_iterations = 25;
  RunResult a = memetic_tabu(22, params, 424242);
  RunResult b = memetic_tabu(22, params, 424242);
  CHECK(a.best == b.best);
  CHECK(a.best_energy == b.best_energy);
  CHECK(a.iterations == b.iterations);
  RunResult c = memetic_tabu(22, params, 424243);
  CHECK((c.best != a.best || c.best_energy != a.best_energy ||
         c.iterations != a.iterations));
}

TEST_CASE("parameter validation") {
  MemeticParams params;
  CHECK_THROWS_AS(memetic_tabu(1, params, 1), std::invalid_argument);
  params.population_size = 1;
  CHECK_THROWS_AS(memetic_tabu(8, params, 1), std::invalid_argument);
  params.population_size = 100;
  params.p_comb = 1.5;
  CHECK_THROWS_AS(memetic_tabu(8, params, 1), std::invalid_argument);
  params.p_comb = 0.9;
  params.p_mutate = 0.0;
  CHECK_THROWS_AS(memetic_tabu(8, params, 1), std::invalid_argument);
  params.p_mutate.reset();
  params.scan_workers = 0;
  CHECK_THROWS_AS(memetic_tabu(8, params, 1), std::invalid_argument);
}
