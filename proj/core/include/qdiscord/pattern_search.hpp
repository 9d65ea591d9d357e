#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <tuple>
#include <utility>

namespace qdiscord {

template <std::size_t N>
struct PatternSearchResult {
  std::array<double, N> x{};
  double value = 0;
  long evals = 0;
  bool converged = false;
};

/// Hooke-Jeeves pattern search. `constrain` maps every trial point onto the
/// feasible set before it is evaluated; the objective may return +inf for
/// points it rejects. Steps are halved after a failed exploration and the
/// search stops once every step is below `tol` or `max_evals` is spent.
/// The returned value never exceeds f(constrain(x0)).
template <std::size_t N, class F, class C>
PatternSearchResult<N> pattern_search(F&& f, C&& constrain, std::array<double, N> x0,
                                      std::array<double, N> steps, double tol, long max_evals) {
  PatternSearchResult<N> r;
  r.x = constrain(x0);
  r.value = f(r.x);
  r.evals = 1;

  auto explore = [&](std::array<double, N> x, double fx) {
    for (std::size_t i = 0; i < N && r.evals < max_evals; ++i) {
      for (double sign : {1.0, -1.0}) {
        std::array<double, N> trial = x;
        trial[i] += sign * steps[i];
        trial = constrain(trial);
        const double ft = f(trial);
        ++r.evals;
        if (ft < fx) {
          x = trial;
          fx = ft;
          break;
        }
      }
    }
    return std::pair{x, fx};
  };

  auto max_step = [&] { return *std::max_element(steps.begin(), steps.end()); };

  while (max_step() >= tol && r.evals < max_evals) {
    auto [x, fx] = explore(r.x, r.value);
    if (!(fx < r.value)) {
      for (double& s : steps) s *= 0.5;
      continue;
    }
    // Accelerate along the successful direction while it keeps paying off.
    while (fx < r.value && r.evals < max_evals) {
      const std::array<double, N> prev = r.x;
      r.x = x;
      r.value = fx;
      std::array<double, N> jump;
      for (std::size_t i = 0; i < N; ++i) jump[i] = 2.0 * r.x[i] - prev[i];
      jump = constrain(jump);
      const double fj = f(jump);
      ++r.evals;
      std::tie(x, fx) = explore(jump, fj);
    }
  }
  r.converged = max_step() < tol;
  return r;
}

}  // namespace qdiscord
