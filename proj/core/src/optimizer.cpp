#include "qdiscord/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "parallel.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/pattern_search.hpp"

namespace qdiscord {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Global samples drawn per independently seeded stream.
constexpr int kChunk = 512;
// Weight offset from the admissible edge used to embed the optimal projective
// measurement as a three-element POVM start point.
constexpr double kProjectiveEmbedOffset = 1e-7;

using Point5 = std::array<double, 5>;  // mu1, mu2, psi, theta, phi
using Point4 = std::array<double, 4>;  // mu1, mu2, psi, theta
using Point2 = std::array<double, 2>;  // polar, azimuth

Rng stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Vec3 sphere_point(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

double povm_objective(const BlochParams& p, double mu1, double mu2, const EulerAngles& e,
                      LogBase base) {
  const double mu3 = 1.0 - mu1 - mu2;
  if (!PovmWeights::admissible(mu1, mu2, mu3)) return kInf;
  try {
    return conditional_entropy_povm3(p, build_povm3(PovmWeights::make(mu1, mu2, mu3), e), base);
  } catch (const DegenerateError&) {
    return kInf;
  }
}

double povm_objective(const BlochParams& p, const Point5& x, LogBase base) {
  return povm_objective(p, x[0], x[1], EulerAngles{x[2], x[3], x[4]}, base);
}

template <std::size_t N>
std::array<double, N> project_weight_coords(std::array<double, N> x) {
  const auto w = project_weights(x[0], x[1]);
  x[0] = w[0];
  x[1] = w[1];
  return x;
}

struct Candidate {
  double value;
  std::size_t order;
  Point5 x;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  return a.value < b.value || (a.value == b.value && a.order < b.order);
}

// Steps are absolute: weights live in (0, 1/2), angles in [0, 2pi).
constexpr double kWeightStep = 0.05;
constexpr double kAngleStep = 0.25;

template <std::size_t N, class F, class C>
PatternSearchResult<N> polish(F&& f, C&& constrain, std::array<double, N> x0,
                              std::array<double, N> steps, const SearchConfig& cfg) {
  // Repeated pattern searches with shrinking restart steps; coordinate polls
  // can stall on diagonal valleys and a restart frees them.
  auto r = pattern_search<N>(f, constrain, x0, steps, cfg.refine_tol, cfg.n_refine_iters);
  long evals = r.evals;
  for (int restart = 0; restart < 4; ++restart) {
    for (double& s : steps) s *= 0.1;
    auto again = pattern_search<N>(f, constrain, r.x, steps, cfg.refine_tol, cfg.n_refine_iters);
    evals += again.evals;
    const bool improved = again.value < r.value;
    if (improved) r = again;
    if (!improved) break;
  }
  r.evals = evals;
  return r;
}

}  // namespace

void SearchConfig::validate() const {
  if (n_global_samples < 1 || n_refine_starts < 1 || n_refine_iters < 1 || angle_grid < 1) {
    throw DomainError("search counts must be >= 1");
  }
  if (!(refine_tol > 0)) throw DomainError("refine_tol must be positive");
  if (threads < 0) throw DomainError("threads must be >= 0");
}

int resolved_threads(const SearchConfig& cfg) noexcept {
  if (cfg.threads > 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

Measurement OptResult::witness() const {
  if (best_weights && best_euler) return build_povm3(*best_weights, *best_euler);
  if (best_direction) return ProjectiveMeasurement{*best_direction};
  return std::monostate{};
}

OptResult minimize_projective(const XState& s, const SearchConfig& cfg, LogBase base) {
  cfg.validate();
  const BlochParams p = bloch_params(s);
  auto objective = [&](const Point2& x) {
    return conditional_entropy_projective(p, sphere_point(x[0], x[1]), base);
  };

  // Axis candidates first so ties resolve to them.
  std::vector<Point2> starts{{0.0, 0.0}, {kPi / 2, 0.0}};
  const int g = cfg.angle_grid;
  for (int i = 0; i <= g; ++i) {
    for (int j = 0; j < 2 * g; ++j) {
      starts.push_back({kPi * i / g, kPi * j / g});
    }
  }
  std::vector<Candidate> scored(starts.size());
  for (std::size_t k = 0; k < starts.size(); ++k) {
    scored[k] = {objective(starts[k]), k, {starts[k][0], starts[k][1], 0, 0, 0}};
  }
  const std::size_t n_refine = std::min<std::size_t>(cfg.n_refine_starts, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + n_refine, scored.end(), candidate_less);

  OptResult out;
  out.global_value = scored.front().value;
  out.n_evals = static_cast<long>(starts.size());

  std::vector<PatternSearchResult<2>> refined(n_refine);
  detail::parallel_for(n_refine, resolved_threads(cfg), [&](std::size_t k) {
    const Point2 x0{scored[k].x[0], scored[k].x[1]};
    refined[k] = polish<2>(objective, [](const Point2& x) { return x; }, x0,
                           Point2{kAngleStep, kAngleStep}, cfg);
  });
  std::size_t best = 0;
  for (std::size_t k = 0; k < n_refine; ++k) {
    out.n_evals += refined[k].evals;
    if (refined[k].value < refined[best].value) best = k;
  }
  out.best_value = refined[best].value;
  out.best_direction = sphere_point(refined[best].x[0], refined[best].x[1]);
  out.converged = refined[best].converged;
  return out;
}

OptResult minimize_povm3(const XState& s, const SearchConfig& cfg, LogBase base) {
  cfg.validate();
  const BlochParams p = bloch_params(s);
  const int threads = resolved_threads(cfg);

  // Global phase: independently seeded streams of kChunk draws each.
  const std::size_t n_samples = static_cast<std::size_t>(cfg.n_global_samples);
  const std::size_t n_chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<Candidate> samples(n_samples);
  detail::parallel_for(n_chunks, threads, [&](std::size_t c) {
    Rng rng = stream(cfg.seed, c);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const std::size_t end = std::min(n_samples, (c + 1) * kChunk);
    for (std::size_t k = c * kChunk; k < end; ++k) {
      const PovmWeights w = sample_weights(rng);
      const double psi = angle(rng), theta = angle(rng), phi = angle(rng);
      const Point5 x{w[0], w[1], psi, theta, phi};
      samples[k] = {povm_objective(p, x, base), k, x};
    }
  });

  const std::size_t n_refine = std::min<std::size_t>(cfg.n_refine_starts, samples.size());
  std::partial_sort(samples.begin(), samples.begin() + n_refine, samples.end(), candidate_less);
  std::vector<Candidate> starts(samples.begin(), samples.begin() + n_refine);

  OptResult out;
  out.global_value = starts.front().value;
  out.n_evals = static_cast<long>(n_samples);

  // Embed the best projective measurement: m1 along n, m2 and m3 nearly -n.
  SearchConfig proj_cfg = cfg;
  proj_cfg.threads = 1;
  const OptResult proj = minimize_projective(s, proj_cfg, base);
  out.n_evals += proj.n_evals;
  {
    const double mu1 = 0.5 - kProjectiveEmbedOffset;
    const double mu2 = 0.5 * (1.0 - mu1);
    const EulerAngles e = euler_for_first_axis(*proj.best_direction);
    const Point5 x{mu1, mu2, e.psi, e.theta, e.phi};
    starts.push_back({povm_objective(p, x, base), starts.size(), x});
  }

  auto objective = [&](const Point5& x) { return povm_objective(p, x, base); };
  const Point5 steps{kWeightStep, kWeightStep, kAngleStep, kAngleStep, kAngleStep};
  std::vector<PatternSearchResult<5>> refined(starts.size());
  detail::parallel_for(starts.size(), threads, [&](std::size_t k) {
    refined[k] = polish<5>(objective, project_weight_coords<5>, starts[k].x, steps, cfg);
  });

  std::size_t best = 0;
  for (std::size_t k = 0; k < refined.size(); ++k) {
    out.n_evals += refined[k].evals;
    if (refined[k].value < refined[best].value) best = k;
  }
  const Point5& x = refined[best].x;
  out.best_value = refined[best].value;
  out.best_weights = PovmWeights::from_pair(x[0], x[1]);
  out.best_euler = EulerAngles::reduced(x[2], x[3], x[4]);
  out.converged = refined[best].converged;
  return out;
}

PhiAudit phi_invariance_audit(const XState& s, const SearchConfig& cfg, LogBase base,
                              int n_phi) {
  if (n_phi < 1) throw DomainError("n_phi must be >= 1");
  const OptResult best = minimize_povm3(s, cfg, base);
  const BlochParams p = bloch_params(s);
  const int threads = resolved_threads(cfg);

  // Shared start pool, independent of phi: the optimum's (weights, psi, theta)
  // plus fresh random draws.
  std::vector<Point4> pool;
  const EulerAngles& e0 = *best.best_euler;
  pool.push_back({(*best.best_weights)[0], (*best.best_weights)[1], e0.psi, e0.theta});
  {
    Rng rng = stream(cfg.seed ^ 0x9e3779b97f4a7c15ULL, 0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const int n_draws = std::max(1, cfg.n_global_samples / 4);
    for (int k = 0; k < n_draws; ++k) {
      const PovmWeights w = sample_weights(rng);
      const double psi = angle(rng), theta = angle(rng);
      pool.push_back({w[0], w[1], psi, theta});
    }
  }

  PhiAudit audit;
  audit.phis.resize(static_cast<std::size_t>(n_phi));
  audit.values.resize(static_cast<std::size_t>(n_phi));
  detail::parallel_for(audit.phis.size(), threads, [&](std::size_t j) {
    const double phi = kTwoPi * static_cast<double>(j) / n_phi;
    auto objective = [&](const Point4& x) {
      return povm_objective(p, x[0], x[1], EulerAngles{x[2], x[3], phi}, base);
    };
    std::vector<Candidate> scored;
    scored.reserve(pool.size() + 2);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const Point4& x = pool[k];
      scored.push_back({objective(x), k, {x[0], x[1], x[2], x[3], 0}});
    }
    // The optimum with psi shifted to follow phi, in both orientations.
    for (double sign : {1.0, -1.0}) {
      Point4 x = pool.front();
      x[2] += sign * (phi - e0.phi);
      scored.push_back({objective(x), scored.size(), {x[0], x[1], x[2], x[3], 0}});
    }
    const std::size_t n_refine = std::min<std::size_t>(cfg.n_refine_starts, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + n_refine, scored.end(), candidate_less);
    double value = kInf;
    const Point4 steps{kWeightStep, kWeightStep, kAngleStep, kAngleStep};
    for (std::size_t k = 0; k < n_refine; ++k) {
      const Point4 x0{scored[k].x[0], scored[k].x[1], scored[k].x[2], scored[k].x[3]};
      value = std::min(value, polish<4>(objective, project_weight_coords<4>, x0, steps, cfg).value);
    }
    audit.phis[j] = phi;
    audit.values[j] = value;
  });
  const auto [lo, hi] = std::minmax_element(audit.values.begin(), audit.values.end());
  audit.spread = *hi - *lo;
  return audit;
}

}  // namespace qdiscord
