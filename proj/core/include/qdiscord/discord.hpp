#pragma once

#include <variant>

#include "qdiscord/entropy.hpp"
#include "qdiscord/povm.hpp"
#include "qdiscord/qstate.hpp"

namespace qdiscord {

/// Outcome probabilities with 1 + zb*m_z below this are treated as never occurring.
inline constexpr double kZeroProbabilityTol = 1e-12;

/// Two-outcome von Neumann measurement along +-direction.
struct ProjectiveMeasurement {
  Vec3 direction;
};

using Measurement = std::variant<std::monostate, ProjectiveMeasurement, Povm3>;

struct MeasurementOutcome {
  double prob;
  double e_value;
};

struct DiscordValue {
  double value;
  double conditional_entropy;
  LogBase base;
  Measurement witness;
};

/// Bloch length of the post-measurement state of qubit A after outcome m on B:
///   sqrt((t1 mx)^2 + (t2 my)^2 + (t3 mz + za)^2) / (1 + zb mz),
/// clamped to [0, 1]. Throws ZeroProbabilityError if 1 + zb mz <= 1e-12.
double e_function(const BlochParams& p, const Vec3& m);
double e_function(const XState& s, const Vec3& m);

/// Probability and E value of the outcome mu (I + m·sigma).
MeasurementOutcome outcome(const BlochParams& p, double mu, const Vec3& m);

/// Σ_k mu_k (1 + zb m_z^(k)) h(E(m^(k))).
double conditional_entropy_povm3(const BlochParams& p, const Povm3& povm, LogBase base);
double conditional_entropy_povm3(const XState& s, const Povm3& povm, LogBase base);

/// The two-outcome case with elements (I +- n·sigma)/2.
double conditional_entropy_projective(const BlochParams& p, const Vec3& n, LogBase base);
double conditional_entropy_projective(const XState& s, const Vec3& n, LogBase base);

/// S(B) - S(AB) + ce.
DiscordValue discord_given_conditional_entropy(const XState& s, double ce, Measurement witness,
                                               LogBase base);

/// Best of the two axis measurements z and x. This is the candidate set used
/// by the closed-form X-state discord formula of Ali, Rau and Alber.
DiscordValue ali_candidate(const XState& s, LogBase base);

}  // namespace qdiscord
