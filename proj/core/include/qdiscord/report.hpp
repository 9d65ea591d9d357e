#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/optimizer.hpp"

namespace qdiscord {

struct NamedState {
  std::string name;
  XState state;
};

/// Parses a state file: a JSON array of records (or an object whose "states"
/// member is such an array), each
///   {"name":"rho1","a":"0.027180","b":"0.000224","c":"0.027327",
///    "d":"0.945269","eps":"0.141651","delta":"0"}
/// Numbers may also be given as JSON numbers. Throws ParseError carrying the
/// line of the offending record; validation failures are rethrown as
/// ParseError naming the record.
std::vector<NamedState> parse_state_file(std::string_view text);

/// The three benchmark states shipped with the tool (rho1, rho2, rho3).
std::string_view benchmark_states_json() noexcept;

struct ReportRow {
  std::string name;
  double delta3_min = 0;  ///< optimized 3-element POVM
  double delta2_min = 0;  ///< optimized projective measurement
  double delta2 = 0;      ///< best axis measurement
  double diff3 = 0;       ///< delta3_min - delta2
  double diff2 = 0;       ///< delta2_min - delta2
  std::array<double, 3> weights{};
  std::array<double, 3> euler{};  ///< psi, theta, phi

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct DiscordReport {
  LogBase base = LogBase::bits;
  std::uint64_t seed = 0;
  int samples = 0;
  int refine_starts = 0;
  double refine_tol = 0;
  std::vector<ReportRow> rows;

  friend bool operator==(const DiscordReport&, const DiscordReport&) = default;
};

/// Computes delta3_min, delta2_min and delta2 for every state. States are
/// processed concurrently; rows keep input order.
DiscordReport run_report(const std::vector<NamedState>& states, const SearchConfig& cfg,
                         LogBase base);

std::string render_table(const DiscordReport& report);
std::string render_csv(const DiscordReport& report);
std::string render_json(const DiscordReport& report);
/// Inverse of render_json. Difference columns are recomputed and must agree
/// with the stored ones within 1e-12 (DomainError otherwise).
DiscordReport report_from_json(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "name,delta3_min,delta2_min,delta2,diff3,diff2,mu1,mu2,mu3,psi,theta,phi,base,seed";

}  // namespace qdiscord
