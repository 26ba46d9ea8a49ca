#include "labsolve/tabu.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "labsolve/correlation_state.hpp"

namespace labsolve {

int sample_max_iter(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("tabu needs length >= 2");
  return static_cast<int>(rng.uniform_int(0, n)) + n / 2;
}

TabuResult tabu_search(const Sequence& seq, const TabuParams& params, Rng& rng,
                       int scan_workers, TabuTrace* trace) {
  int n = seq.size();
  if (n < 2) throw std::invalid_argument("tabu needs length >= 2");
  if (params.min_tabu_factor < 0 || params.max_tabu_factor < params.min_tabu_factor ||
      params.max_tabu_factor >= 1)
    throw std::invalid_argument("tabu tenure factors need 0 <= min <= max < 1");
  if (scan_workers < 1) throw std::invalid_argument("scan workers must be >= 1");

  int max_iter = sample_max_iter(n, rng);
  // The +1e-9 keeps exact decimal products (0.12*25 = 3) on the integer side.
  int min_tabu = static_cast<int>(std::floor(params.min_tabu_factor * max_iter + 1e-9));
  int max_tabu = static_cast<int>(std::floor(params.max_tabu_factor * max_iter + 1e-9));
  if (trace) {
    trace->max_iter = max_iter;
    trace->min_tabu = min_tabu;
    trace->max_tabu = max_tabu;
    trace->steps.clear();
  }

  CorrelationState state(seq);
  Sequence best = seq;
  long long best_energy = state.energy();
  std::vector<long long> expiry(n, 0);  // position admissible when expiry < t

  for (int t = 1; t <= max_iter; ++t) {
    ScanResult pick = scan_neighborhood(
        state, [&](int i) { return expiry[i] < t; }, rng, scan_workers);
    state.apply_flip(pick.position);
    int tenure = static_cast<int>(rng.uniform_int(min_tabu, max_tabu));
    expiry[pick.position] = t + tenure;
    if (state.energy() < best_energy) {
      best_energy = state.energy();
      best = state.pivot();
    }
    if (trace)
      trace->steps.push_back({t, pick.position, state.energy(), tenure, pick.fallback});
  }
  return {best, best_energy};
}

std::string format_trace(const TabuTrace& trace) {
  std::ostringstream out;
  out << "maxIter " << trace.max_iter << " tenure [" << trace.min_tabu << ","
      << trace.max_tabu << "]\n";
  for (const TabuStep& s : trace.steps) {
    out << s.iteration << ' ' << s.position << ' ' << s.energy << ' '
        << s.tenure;
    if (s.fallback) out << " fallback";
    out << '\n';
  }
  return out.str();
}

}  // namespace labsolve
