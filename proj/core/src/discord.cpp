#include "qdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

constexpr double kUnitTol = 1e-10;

void require_unit(const Vec3& m) {
  if (!(std::abs(m.norm() - 1.0) <= kUnitTol)) {
    std::ostringstream os;
    os << "measurement direction must be a unit vector, |m| = " << m.norm();
    throw DomainError(os.str());
  }
}

// Weighted entropy term mu (1 + zb mz) h(E(m)); zero when the outcome never occurs.
double entropy_term(const BlochParams& p, double mu, const Vec3& m, LogBase base) {
  const double scale = 1.0 + p.zb * m.z();
  if (scale <= kZeroProbabilityTol) return 0.0;
  return mu * scale * binary_entropy(e_function(p, m), base);
}

}  // namespace

double e_function(const BlochParams& p, const Vec3& m) {
  require_unit(m);
  const double scale = 1.0 + p.zb * m.z();
  if (scale <= kZeroProbabilityTol) {
    throw ZeroProbabilityError("measurement outcome has zero probability");
  }
  const double x = p.t1 * m.x();
  const double y = p.t2 * m.y();
  const double z = p.t3 * m.z() + p.za;
  const double e = std::sqrt(x * x + y * y + z * z) / scale;
  return std::min(e, 1.0);
}

double e_function(const XState& s, const Vec3& m) { return e_function(bloch_params(s), m); }

MeasurementOutcome outcome(const BlochParams& p, double mu, const Vec3& m) {
  const double scale = 1.0 + p.zb * m.z();
  if (scale <= kZeroProbabilityTol) return {0.0, 0.0};
  return {mu * scale, e_function(p, m)};
}

double conditional_entropy_povm3(const BlochParams& p, const Povm3& povm, LogBase base) {
  double ce = 0;
  for (std::size_t k = 0; k < 3; ++k) ce += entropy_term(p, povm.weights[k], povm.dirs[k], base);
  return ce;
}

double conditional_entropy_povm3(const XState& s, const Povm3& povm, LogBase base) {
  return conditional_entropy_povm3(bloch_params(s), povm, base);
}

double conditional_entropy_projective(const BlochParams& p, const Vec3& n, LogBase base) {
  require_unit(n);
  return entropy_term(p, 0.5, n, base) + entropy_term(p, 0.5, -n, base);
}

double conditional_entropy_projective(const XState& s, const Vec3& n, LogBase base) {
  return conditional_entropy_projective(bloch_params(s), n, base);
}

DiscordValue discord_given_conditional_entropy(const XState& s, double ce, Measurement witness,
                                               LogBase base) {
  if (!(ce >= -1e-12)) throw DomainError("conditional entropy must be nonnegative");
  double value = marginal_entropy_b(s, base) - von_neumann_xstate(s, base) + ce;
  if (value < 0 && value > -1e-12) value = 0;  // rounding on classical states
  return DiscordValue{value, ce, base, std::move(witness)};
}

DiscordValue ali_candidate(const XState& s, LogBase base) {
  const BlochParams p = bloch_params(s);
  const Vec3 z_axis = Vec3::UnitZ();
  const Vec3 x_axis = Vec3::UnitX();
  const double ce_z = conditional_entropy_projective(p, z_axis, base);
  const double ce_x = conditional_entropy_projective(p, x_axis, base);
  const bool use_z = ce_z <= ce_x;
  return discord_given_conditional_entropy(s, use_z ? ce_z : ce_x,
                                           ProjectiveMeasurement{use_z ? z_axis : x_axis}, base);
}

}  // namespace qdiscord
