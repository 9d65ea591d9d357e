// discord: quantum discord of two-qubit X states from the command line.
//
//   discord run --benchmarks --base bits --format table
//   discord run --states states.json --base nats --seed 7 --samples 40000 --format csv
//   discord validate --states states.json
//   discord audit-phi --benchmarks
//
// DISCORD_THREADS caps the number of worker threads.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdiscord/errors.hpp"
#include "qdiscord/report.hpp"

namespace {

using namespace qdiscord;

struct Inputs {
  std::string states_path;
  bool benchmarks = false;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--states", in.states_path, "JSON state file");
  cmd->add_flag("--benchmarks", in.benchmarks, "Include the bundled benchmark states rho1..rho3");
}

std::vector<NamedState> load_states(const Inputs& in) {
  std::vector<NamedState> states;
  if (in.benchmarks) states = parse_state_file(benchmark_states_json());
  if (!in.states_path.empty()) {
    std::ifstream file(in.states_path);
    if (!file) throw std::runtime_error("cannot open state file '" + in.states_path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    try {
      for (auto& s : parse_state_file(buf.str())) states.push_back(std::move(s));
    } catch (const ParseError& e) {
      throw ParseError(in.states_path + ":" + std::to_string(e.line()) + ": " + e.what(), e.line(),
                       e.record());
    }
  }
  if (!in.benchmarks && in.states_path.empty()) {
    throw std::runtime_error("no input: pass --states <file> and/or --benchmarks");
  }
  return states;
}

int env_threads() {
  const char* v = std::getenv("DISCORD_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  const int n = std::atoi(v);
  if (n < 1) throw std::runtime_error("DISCORD_THREADS must be a positive integer");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord of two-qubit X states"};
  app.require_subcommand(1);

  Inputs in;
  SearchConfig cfg;
  std::string base_name = "bits";
  std::string format = "table";
  int phi_points = 12;

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--base", base_name, "Logarithm base")
        ->check(CLI::IsMember({"bits", "nats"}))
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    cmd->add_option("--samples", cfg.n_global_samples, "Monte-Carlo samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--refine-starts", cfg.n_refine_starts, "Candidates refined locally")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--refine-tol", cfg.refine_tol, "Pattern-search step tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--angle-grid", cfg.angle_grid, "Projective pre-scan resolution")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* run = app.add_subcommand("run", "Compare POVM, projective and axis-measurement discord");
  add_inputs(run, in);
  add_search(run);
  run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Parse and validate a state file");
  add_inputs(validate, in);

  auto* audit = app.add_subcommand("audit-phi", "Check that the POVM optimum does not depend on phi");
  add_inputs(audit, in);
  add_search(audit);
  audit->add_option("--phi-points", phi_points, "Grid points in [0, 2pi)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.threads = env_threads();
    const LogBase base = parse_log_base(base_name);
    const auto states = load_states(in);

    if (*validate) {
      for (const auto& s : states) std::cout << "ok " << s.name << "\n";
      std::cout << states.size() << " state(s) valid\n";
      return 0;
    }
    if (*run) {
      const DiscordReport report = run_report(states, cfg, base);
      if (format == "json") std::cout << render_json(report);
      else if (format == "csv") std::cout << render_csv(report);
      else std::cout << render_table(report);
      return 0;
    }
    if (*audit) {
      std::cout << "# phi invariance in " << to_string(base) << "  seed=" << cfg.seed
                << "  samples=" << cfg.n_global_samples << "  phi_points=" << phi_points << "\n";
      for (const auto& s : states) {
        const PhiAudit a = phi_invariance_audit(s.state, cfg, base, phi_points);
        std::printf("%-10s spread=%.3e  min=%.12f\n", s.name.c_str(), a.spread,
                    *std::min_element(a.values.begin(), a.values.end()));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "discord: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
