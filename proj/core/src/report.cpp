#include "qdiscord/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"
#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

using nlohmann::json;

constexpr std::string_view kBenchmarks = R"([
  {"name":"rho1","a":"0.027180","b":"0.000224","c":"0.027327","d":"0.945269","eps":"0.141651","delta":"0"},
  {"name":"rho2","a":"0.021726","b":"0.010288","c":"0.010288","d":"0.957698","eps":"0.128057","delta":"0"},
  {"name":"rho3","a":"0.0783","b":"0.1250","c":"0.1250","d":"0.6717","eps":"0","delta":"0.1000"}
]
)";

int line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Byte offsets of every '{' opening an object at bracket depth `depth`.
std::vector<std::size_t> object_offsets(std::string_view text, int depth) {
  std::vector<std::size_t> out;
  int level = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      if (ch == '\\') ++i;
      else if (ch == '"') in_string = false;
      continue;
    }
    switch (ch) {
      case '"': in_string = true; break;
      case '{':
        if (level == depth) out.push_back(i);
        ++level;
        break;
      case '[': ++level; break;
      case '}':
      case ']': --level; break;
      default: break;
    }
  }
  return out;
}

double parse_decimal(const json& v, const char* field, const std::string& record, int line) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) {
    throw ParseError(std::string("field '") + field + "' must be a decimal string", line, record);
  }
  const auto& s = v.get_ref<const std::string&>();
  double out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string("field '") + field + "' is not a decimal: \"" + s + "\"", line,
                     record);
  }
  return out;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

json row_to_json(const ReportRow& r) {
  return json{{"name", r.name},     {"delta3_min", r.delta3_min}, {"delta2_min", r.delta2_min},
              {"delta2", r.delta2}, {"diff3", r.diff3},           {"diff2", r.diff2},
              {"weights", r.weights}, {"euler", r.euler}};
}

}  // namespace

std::string_view benchmark_states_json() noexcept { return kBenchmarks; }

std::vector<NamedState> parse_state_file(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  const json* records = &root;
  int depth = 1;
  if (root.is_object()) {
    if (!root.contains("states")) throw ParseError("expected a \"states\" array", 1);
    records = &root["states"];
    depth = 2;
  }
  if (!records->is_array()) throw ParseError("expected an array of state records", 1);
  const auto offsets = object_offsets(text, depth);

  std::vector<NamedState> out;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < records->size(); ++k) {
    const json& rec = (*records)[k];
    const int line = k < offsets.size() ? line_of(text, offsets[k]) : 1;
    if (!rec.is_object()) throw ParseError("state record must be an object", line);
    if (!rec.contains("name") || !rec["name"].is_string()) {
      throw ParseError("state record #" + std::to_string(k + 1) + " has no string \"name\"", line);
    }
    const std::string name = rec["name"].get<std::string>();
    if (!seen.insert(name).second) throw ParseError("duplicate state name '" + name + "'", line, name);
    double v[6];
    const char* fields[] = {"a", "b", "c", "d", "eps", "delta"};
    for (int f = 0; f < 6; ++f) {
      if (!rec.contains(fields[f])) {
        throw ParseError("state '" + name + "' is missing field '" + fields[f] + "'", line, name);
      }
      v[f] = parse_decimal(rec[fields[f]], fields[f], name, line);
    }
    try {
      out.push_back({name, XState::from_entries(v[0], v[1], v[2], v[3], v[4], v[5])});
    } catch (const Error& e) {
      throw ParseError("state '" + name + "': " + e.what(), line, name);
    }
  }
  return out;
}

DiscordReport run_report(const std::vector<NamedState>& states, const SearchConfig& cfg,
                         LogBase base) {
  cfg.validate();
  DiscordReport report;
  report.base = base;
  report.seed = cfg.seed;
  report.samples = cfg.n_global_samples;
  report.refine_starts = cfg.n_refine_starts;
  report.refine_tol = cfg.refine_tol;
  report.rows.resize(states.size());

  const int threads = resolved_threads(cfg);
  const int outer = std::max(1, std::min<int>(threads, static_cast<int>(states.size())));
  SearchConfig inner = cfg;
  inner.threads = std::max(1, threads / outer);

  detail::parallel_for(states.size(), outer, [&](std::size_t i) {
    const XState& s = states[i].state;
    const OptResult povm = minimize_povm3(s, inner, base);
    const OptResult proj = minimize_projective(s, inner, base);
    const DiscordValue d3 = discord_given_conditional_entropy(s, povm.best_value, povm.witness(), base);
    const DiscordValue d2m =
        discord_given_conditional_entropy(s, proj.best_value, proj.witness(), base);
    const DiscordValue d2 = ali_candidate(s, base);

    ReportRow& row = report.rows[i];
    row.name = states[i].name;
    row.delta3_min = d3.value;
    row.delta2_min = d2m.value;
    row.delta2 = d2.value;
    row.diff3 = d3.value - d2.value;
    row.diff2 = d2m.value - d2.value;
    row.weights = povm.best_weights->values();
    row.euler = {povm.best_euler->psi, povm.best_euler->theta, povm.best_euler->phi};
  });
  return report;
}

std::string render_table(const DiscordReport& report) {
  std::ostringstream os;
  os << "# quantum discord in " << to_string(report.base) << "  seed=" << report.seed
     << "  samples=" << report.samples << "  refine_starts=" << report.refine_starts
     << "  refine_tol=" << fmt("%.0e", report.refine_tol) << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %12s %12s %12s %13s %13s   %-24s %s\n", "state",
                "delta3_min", "delta2_min", "delta2", "diff3", "diff2", "(mu1, mu2, mu3)",
                "(psi, theta, phi)");
  os << line;
  for (const ReportRow& r : report.rows) {
    std::snprintf(line, sizeof line,
                  "%-10s %12.6f %12.6f %12.6f %13.4e %13.4e   (%.4f, %.4f, %.4f) (%.4f, %.4f, %.4f)\n",
                  r.name.c_str(), r.delta3_min, r.delta2_min, r.delta2, r.diff3, r.diff2,
                  r.weights[0], r.weights[1], r.weights[2], r.euler[0], r.euler[1], r.euler[2]);
    os << line;
  }
  return os.str();
}

std::string render_csv(const DiscordReport& report) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const ReportRow& r : report.rows) {
    os << r.name;
    for (double v : {r.delta3_min, r.delta2_min, r.delta2, r.diff3, r.diff2, r.weights[0],
                     r.weights[1], r.weights[2], r.euler[0], r.euler[1], r.euler[2]}) {
      os << ',' << fmt("%.17g", v);
    }
    os << ',' << to_string(report.base) << ',' << report.seed << "\n";
  }
  return os.str();
}

std::string render_json(const DiscordReport& report) {
  json rows = json::array();
  for (const ReportRow& r : report.rows) rows.push_back(row_to_json(r));
  const json doc{{"base", to_string(report.base)},
                 {"seed", report.seed},
                 {"samples", report.samples},
                 {"refine_starts", report.refine_starts},
                 {"refine_tol", report.refine_tol},
                 {"rows", rows}};
  return doc.dump(2) + "\n";
}

DiscordReport report_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  DiscordReport report;
  try {
    report.base = parse_log_base(doc.at("base").get<std::string>());
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.samples = doc.at("samples").get<int>();
    report.refine_starts = doc.at("refine_starts").get<int>();
    report.refine_tol = doc.at("refine_tol").get<double>();
    for (const json& j : doc.at("rows")) {
      ReportRow r;
      r.name = j.at("name").get<std::string>();
      r.delta3_min = j.at("delta3_min").get<double>();
      r.delta2_min = j.at("delta2_min").get<double>();
      r.delta2 = j.at("delta2").get<double>();
      r.diff3 = j.at("diff3").get<double>();
      r.diff2 = j.at("diff2").get<double>();
      r.weights = j.at("weights").get<std::array<double, 3>>();
      r.euler = j.at("euler").get<std::array<double, 3>>();
      if (std::abs(r.diff3 - (r.delta3_min - r.delta2)) > 1e-12 ||
          std::abs(r.diff2 - (r.delta2_min - r.delta2)) > 1e-12) {
        throw DomainError("row '" + r.name + "': difference columns are inconsistent");
      }
      report.rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 1);
  }
  return report;
}

}  // namespace qdiscord
