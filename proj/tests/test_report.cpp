#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "benchmark_states.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/report.hpp"

using namespace qdiscord;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SearchConfig quick_config() {
  SearchConfig cfg;
  cfg.n_global_samples = 2000;
  cfg.angle_grid = 32;
  return cfg;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("bundled benchmark states") {
  const auto states = parse_state_file(benchmark_states_json());
  REQUIRE(states.size() == 3);
  CHECK(states[0].name == "rho1");
  CHECK(states[0].state == testing::rho1());
  CHECK(states[1].state == testing::rho2());
  CHECK(states[2].state == testing::rho3());

  const std::string shipped = read_file(QDISCORD_SOURCE_DIR "/tools/data/benchmarks.json");
  CHECK(shipped == std::string(benchmark_states_json()));
}

TEST_CASE("record format") {
  const auto one = parse_state_file(
      R"([{"name":"rho1","a":"0.027180","b":"0.000224","c":"0.027327","d":"0.945269","eps":"0.141651","delta":"0"}])");
  REQUIRE(one.size() == 1);
  CHECK(one[0].state == testing::rho1());

  const auto wrapped = parse_state_file(R"({"states":[{"name":"mm","a":0.25,"b":0.25,"c":0.25,"d":0.25,"eps":0,"delta":0}]})");
  REQUIRE(wrapped.size() == 1);
  CHECK(wrapped[0].state == XState::maximally_mixed());

  CHECK(parse_state_file("[]").empty());
  CHECK(parse_state_file(R"({"states":[]})").empty());
}

TEST_CASE("parse errors carry the record and line") {
  const std::string text =
      "[\n"
      "  {\"name\":\"ok\",\"a\":\"0.25\",\"b\":\"0.25\",\"c\":\"0.25\",\"d\":\"0.25\",\"eps\":\"0\",\"delta\":\"0\"},\n"
      "  {\"name\":\"short\",\"a\":\"0.2\",\"b\":\"0.2\",\"c\":\"0.25\",\"d\":\"0.25\",\"eps\":\"0\",\"delta\":\"0\"}\n"
      "]\n";
  try {
    parse_state_file(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.record() == "short");
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("short") != std::string::npos);
  }

  try {
    parse_state_file("[\n  {\"name\": \"x\",\n   \"a\": }\n]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  const auto bad = [](const char* t) { CHECK_THROWS_AS(parse_state_file(t), ParseError); };
  bad(R"([{"name":"x","a":"0.25","b":"0.25","c":"0.25","d":"0.25","eps":"0"}])");
  bad(R"([{"name":"x","a":"0.25x","b":"0.25","c":"0.25","d":"0.25","eps":"0","delta":"0"}])");
  bad(R"([{"name":"x","a":true,"b":"0.25","c":"0.25","d":"0.25","eps":"0","delta":"0"}])");
  bad(R"([{"a":"0.25","b":"0.25","c":"0.25","d":"0.25","eps":"0","delta":"0"}])");
  bad(R"([{"name":"x","a":"0.5","b":"0","c":"0","d":"0.5","eps":"0.6","delta":"0"}])");
  bad(R"([{"name":"x","a":"0.25","b":"0.25","c":"0.25","d":"0.25","eps":"0","delta":"0"},
          {"name":"x","a":"0.25","b":"0.25","c":"0.25","d":"0.25","eps":"0","delta":"0"}])");
  bad(R"({"rows":[]})");
  bad("42");
}

TEST_CASE("report on trivial states") {
  const std::vector<NamedState> states{{"mm", XState::maximally_mixed()}};
  const auto report = run_report(states, quick_config(), LogBase::bits);
  REQUIRE(report.rows.size() == 1);
  const auto& r = report.rows[0];
  CHECK(std::abs(r.delta3_min) <= 1e-6);
  CHECK(std::abs(r.delta2_min) <= 1e-6);
  CHECK(std::abs(r.delta2) <= 1e-6);
}

TEST_CASE("renderers and JSON round trip") {
  auto states = parse_state_file(benchmark_states_json());
  states.push_back({"bell", testing::bell()});
  const auto report = run_report(states, quick_config(), LogBase::bits);
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[3].name == "bell");
  for (const auto& r : report.rows) {
    CHECK(std::abs(r.diff3 - (r.delta3_min - r.delta2)) <= 1e-12);
    CHECK(std::abs(r.diff2 - (r.delta2_min - r.delta2)) <= 1e-12);
  }

  CHECK(report_from_json(render_json(report)) == report);

  const std::string csv = render_csv(report);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == kCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 13);
    CHECK(line.ends_with(",bits,20100401"));
  }
  CHECK(rows == 4);

  const std::string table = render_table(report);
  CHECK(table.find("seed=20100401") != std::string::npos);
  CHECK(table.find("samples=2000") != std::string::npos);
  CHECK(table.find("rho3") != std::string::npos);
}

TEST_CASE("report JSON rejects inconsistent differences") {
  auto report = run_report({{"mm", XState::maximally_mixed()}}, quick_config(), LogBase::nats);
  report.rows[0].diff3 = 0.5;
  CHECK_THROWS_AS(report_from_json(render_json(report)), DomainError);
  CHECK_THROWS_AS(report_from_json("{"), ParseError);
  CHECK_THROWS_AS(report_from_json(R"({"base":"bits"})"), ParseError);
}

TEST_CASE("bits and nats reports agree up to ln 2") {
  const auto states = parse_state_file(benchmark_states_json());
  const auto bits = run_report(states, SearchConfig{}, LogBase::bits);
  const auto nats = run_report(states, SearchConfig{}, LogBase::nats);
  for (std::size_t i = 0; i < states.size(); ++i) {
    CHECK(std::abs(nats.rows[i].delta2 - bits.rows[i].delta2 * std::numbers::ln2) <= 1e-9);
    CHECK(std::abs(nats.rows[i].delta2_min - bits.rows[i].delta2_min * std::numbers::ln2) <= 1e-4);
    CHECK(std::abs(nats.rows[i].delta3_min - bits.rows[i].delta3_min * std::numbers::ln2) <= 1e-4);
  }
}

}  // TEST_SUITE
