#include "labsolve/fit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

namespace labsolve {

std::vector<TtsSample> run_tts(const BenchPlan& plan) {
  if (plan.repetitions < 1)
    throw std::invalid_argument("repetitions must be >= 1");
  for (int n : plan.n_values)
    if (!plan.targets.count(n))
      throw std::invalid_argument("no target energy for n = " + std::to_string(n));

  std::vector<TtsSample> samples;
  samples.reserve(plan.n_values.size() * plan.repetitions);
  std::uint64_t run_index = 0;
  for (int n : plan.n_values) {
    for (int rep = 0; rep < plan.repetitions; ++rep, ++run_index) {
      ParallelConfig cfg = plan.base;
      cfg.n = n;
      cfg.memetic.target_energy = plan.targets.at(n);
      cfg.base_seed = plan.base.base_seed +
                      run_index * static_cast<std::uint64_t>(cfg.replicas);
      auto t0 = std::chrono::steady_clock::now();
      RunResult result = run_replicas(cfg);
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
      samples.push_back({n, cfg.memetic.target_energy, dt,
                         result.reached_target, cfg.base_seed, cfg.replicas});
    }
  }
  return samples;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty sample");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile level");
  std::sort(values.begin(), values.end());
  double h = (static_cast<double>(values.size()) - 1.0) * q;
  std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::map<int, double> median_runtime_by_n(const std::vector<TtsSample>& samples) {
  std::map<int, std::vector<double>> grouped;
  for (const TtsSample& s : samples)
    if (s.reached_target) grouped[s.n].push_back(s.runtime_seconds);
  std::map<int, double> medians;
  for (auto& [n, runtimes] : grouped)
    medians[n] = quantile(std::move(runtimes), 0.5);
  return medians;
}

FitResult fit_exponential(const std::vector<TtsSample>& samples, int n_min_fit,
                          int n_max_fit) {
  if (n_min_fit > n_max_fit) throw std::invalid_argument("empty fit window");
  std::map<int, double> medians = median_runtime_by_n(samples);

  std::vector<double> xs, ys;
  for (const auto& [n, median] : medians) {
    if (n < n_min_fit || n > n_max_fit) continue;
    if (!(median > 0.0))
      throw std::domain_error("median runtime must be positive to fit");
    xs.push_back(n);
    ys.push_back(std::log(median));
  }
  std::size_t m = xs.size();
  if (m < 3)
    throw std::invalid_argument("fit needs at least three uncensored medians");

  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  double mx = sx / static_cast<double>(m);
  double my = sy / static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double slope = sxy / sxx;
  double intercept = my - slope * mx;

  double ss_res = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double r = ys[i] - (intercept + slope * xs[i]);
    ss_res += r * r;
  }
  double dof = static_cast<double>(m) - 2.0;
  double sigma2 = ss_res / dof;
  double se_slope = std::sqrt(sigma2 / sxx);
  double se_intercept = std::sqrt(sigma2 * (1.0 / static_cast<double>(m) + mx * mx / sxx));
  boost::math::students_t dist(dof);
  double t = boost::math::quantile(dist, 0.975);

  FitResult fit;
  fit.a = std::exp(intercept);
  fit.b = std::exp(slope);
  fit.a_ci = {std::exp(intercept - t * se_intercept),
              std::exp(intercept + t * se_intercept)};
  fit.b_ci = {std::exp(slope - t * se_slope), std::exp(slope + t * se_slope)};
  fit.n_min_fit = n_min_fit;
  fit.n_max_fit = n_max_fit;
  fit.points_used = static_cast<int>(m);
  return fit;
}

void write_samples(const std::string& path,
                   const std::vector<TtsSample>& samples) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write samples file: " + path);
  for (const TtsSample& s : samples) {
    nlohmann::json record{{"n", s.n},
                          {"targetE", s.target_energy},
                          {"runtime", s.runtime_seconds},
                          {"reachedTarget", s.reached_target},
                          {"seed", s.seed},
                          {"replicas", s.replicas}};
    out << record.dump() << '\n';
  }
}

std::vector<TtsSample> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open samples file: " + path);
  std::vector<TtsSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
      samples.push_back({record.at("n").get<int>(),
                         record.at("targetE").get<long long>(),
                         record.at("runtime").get<double>(),
                         record.at("reachedTarget").get<bool>(),
                         record.at("seed").get<std::uint64_t>(),
                         record.at("replicas").get<int>()});
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return samples;
}

std::map<int, long long> read_targets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open targets file: " + path);
  std::map<int, long long> targets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    int n;
    long long e;
    if (!(fields >> n >> e))
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 'n energy'");
    targets[n] = e;
  }
  return targets;
}

}  // namespace labsolve
