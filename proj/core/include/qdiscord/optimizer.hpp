#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdiscord/discord.hpp"

namespace qdiscord {

struct SearchConfig {
  std::uint64_t seed = 20100401;
  /// Random (weights, Euler angles) draws in the global phase.
  int n_global_samples = 20000;
  /// Best global candidates handed to local refinement.
  int n_refine_starts = 10;
  /// Cap on objective evaluations per refinement run.
  int n_refine_iters = 20000;
  /// Refinement stops once every step size is below this.
  double refine_tol = 1e-10;
  /// Resolution of the (polar, azimuth) grid of the projective pre-scan.
  int angle_grid = 64;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  int threads = 0;

  /// Throws DomainError if a count is < 1 or refine_tol <= 0.
  void validate() const;
};

struct OptResult {
  double best_value = 0;
  /// Best value before local refinement.
  double global_value = 0;
  std::optional<PovmWeights> best_weights;
  std::optional<EulerAngles> best_euler;
  std::optional<Vec3> best_direction;
  long n_evals = 0;
  bool converged = false;

  /// The minimizing measurement as a Measurement variant.
  Measurement witness() const;
};

/// Minimum of the projective conditional entropy over the unit sphere.
OptResult minimize_projective(const XState& s, const SearchConfig& cfg, LogBase base);

/// Minimum of the three-element POVM conditional entropy over admissible
/// weights and Euler angles: seeded Monte-Carlo sampling, then Hooke-Jeeves
/// pattern search from the best candidates.
OptResult minimize_povm3(const XState& s, const SearchConfig& cfg, LogBase base);

struct PhiAudit {
  std::vector<double> phis;
  /// Conditional entropy minimized over (weights, psi, theta) at each fixed phi.
  std::vector<double> values;
  double spread = 0;
};

/// Re-minimizes the POVM objective with phi pinned at each of n_phi grid
/// points in [0, 2pi) and reports the spread of the minima.
PhiAudit phi_invariance_audit(const XState& s, const SearchConfig& cfg, LogBase base,
                              int n_phi = 12);

/// Number of workers to use for cfg (resolves threads == 0).
int resolved_threads(const SearchConfig& cfg) noexcept;

}  // namespace qdiscord
