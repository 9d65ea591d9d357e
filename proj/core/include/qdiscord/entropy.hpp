#pragma once

#include <span>
#include <string_view>

#include "qdiscord/qstate.hpp"

namespace qdiscord {

enum class LogBase { bits, nats };

const char* to_string(LogBase base) noexcept;
/// Accepts "bits" or "nats"; throws DomainError otherwise.
LogBase parse_log_base(std::string_view text);

/// Conversion factor from bits to the requested unit (1 or ln 2).
double bits_to(LogBase base) noexcept;

/// h(x) = -(1+x)/2 log (1+x)/2 - (1-x)/2 log (1-x)/2 with 0 log 0 = 0.
/// |x| up to 1 + 1e-9 is clamped to the unit interval; beyond that DomainError.
double binary_entropy(double x, LogBase base);

/// -Σ p log p for a probability vector. Entries in [-1e-10, 0) are treated as
/// zero; more negative entries throw std::logic_error.
double shannon_entropy(std::span<const double> probs, LogBase base);

double von_neumann_xstate(const XState& s, LogBase base);
double marginal_entropy_a(const XState& s, LogBase base);
double marginal_entropy_b(const XState& s, LogBase base);

/// S(A) + S(B) - S(AB).
double mutual_information(const XState& s, LogBase base);

}  // namespace qdiscord
