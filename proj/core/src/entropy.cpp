#include "qdiscord/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

constexpr double kNegativeEigenTol = 1e-10;

double log_in(double x, LogBase base) { return base == LogBase::bits ? std::log2(x) : std::log(x); }

double plogp(double p, LogBase base) { return p > 0 ? p * log_in(p, base) : 0.0; }

}  // namespace

const char* to_string(LogBase base) noexcept { return base == LogBase::bits ? "bits" : "nats"; }

LogBase parse_log_base(std::string_view text) {
  if (text == "bits") return LogBase::bits;
  if (text == "nats") return LogBase::nats;
  throw DomainError("unknown log base '" + std::string(text) + "' (expected bits or nats)");
}

double bits_to(LogBase base) noexcept { return base == LogBase::bits ? 1.0 : std::numbers::ln2; }

double binary_entropy(double x, LogBase base) {
  if (!(std::abs(x) <= 1.0 + 1e-9)) {
    throw DomainError("binary_entropy argument " + std::to_string(x) + " outside [-1, 1]");
  }
  // Using |x| makes h exactly even.
  const double ax = std::min(std::abs(x), 1.0);
  const double p = 0.5 * (1.0 + ax);
  const double q = 0.5 * (1.0 - ax);
  return -plogp(p, base) - plogp(q, base);
}

double shannon_entropy(std::span<const double> probs, LogBase base) {
  double h = 0;
  for (double p : probs) {
    if (p < -kNegativeEigenTol) {
      throw std::logic_error("negative probability " + std::to_string(p) + " in entropy");
    }
    h -= plogp(p, base);
  }
  return h;
}

double von_neumann_xstate(const XState& s, LogBase base) {
  const auto ev = block_eigenvalues(s);
  return shannon_entropy(ev, base);
}

double marginal_entropy_a(const XState& s, LogBase base) {
  const auto m = marginal_a(s);
  const double p[] = {m.p0, m.p1};
  return shannon_entropy(p, base);
}

double marginal_entropy_b(const XState& s, LogBase base) {
  const auto m = marginal_b(s);
  const double p[] = {m.p0, m.p1};
  return shannon_entropy(p, base);
}

double mutual_information(const XState& s, LogBase base) {
  return marginal_entropy_a(s, base) + marginal_entropy_b(s, base) - von_neumann_xstate(s, base);
}

}  // namespace qdiscord
