// Copyright 2026 The paulicycles authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "paulicycles/json_io.hpp"
#include "paulicycles/search.hpp"

using namespace paulicycles;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "paulicycles_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliRun {
  int exit_code;
  json output;
  bool parsed;
};

CliRun run_cli(const std::string& args) {
  fs::path out = temp_dir() / "stdout.json";
  std::string cmd = std::string(PAULICYCLES_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliRun run{WEXITSTATUS(status), json(), false};
  std::ifstream in(out);
  if (in) {
    try {
      in >> run.output;
      run.parsed = true;
    } catch (...) {
    }
  }
  return run;
}

}  // namespace

TEST_CASE("graph and realization JSON round-trips") {
  Graph g = glue(Graph::cycle(5), Graph::cycle(5), {{0, 0}, {1, 1}});
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);

  Realization r = construct_big_cycle(5);
  Realization rb = realization_from_json(realization_to_json(r));
  CHECK(rb.graph == r.graph);
  REQUIRE(rb.ops.size() == r.ops.size());
  for (size_t v = 0; v < r.ops.size(); ++v) CHECK(rb.ops[v] == r.ops[v]);
}

TEST_CASE("state and model JSON round-trips") {
  std::mt19937_64 rng(113);
  std::normal_distribution<double> gauss;
  StateVector st;
  st.amps.resize(8);
  for (auto& a : st.amps) a = {gauss(rng), gauss(rng)};
  double n = st.norm();
  for (auto& a : st.amps) a /= n;
  StateVector sb = state_from_json(state_to_json(st));
  REQUIRE(sb.amps.size() == st.amps.size());
  for (size_t i = 0; i < st.amps.size(); ++i) {
    CHECK(std::abs(sb.amps[i] - st.amps[i]) < 1e-15);
  }

  Realization r = construct_cycle_plus2(3);
  Scenario sc = Scenario::from_graph(r.graph);
  EmpiricalModel model = quantum_behavior(r, st, sc);
  EmpiricalModel mb = model_from_json(model_to_json(model));
  REQUIRE(mb.tables.size() == model.tables.size());
  for (size_t c = 0; c < model.tables.size(); ++c) {
    for (size_t o = 0; o < model.tables[c].size(); ++o) {
      CHECK(std::abs(mb.tables[c][o] - model.tables[c][o]) < 1e-12);
    }
  }
}

TEST_CASE("outcome strings") {
  CHECK(outcome_string(0, 2) == "++");
  CHECK(outcome_string(2, 2) == "+-");
  CHECK(outcome_from_string("+-") == 2);
  CHECK(outcome_from_string("--") == 3);
  CHECK_THROWS_AS(outcome_from_string("+0"), std::invalid_argument);
}

TEST_CASE("cli: construct writes a faithful realization and respects exit codes") {
  fs::path out = temp_dir() / "c5.json";
  CliRun run = run_cli("construct c2 --m 3 --out " + out.string());
  CHECK(run.exit_code == 0);
  REQUIRE(run.parsed);
  CHECK(run.output.at("results").at("vertices") == 5);
  Realization r = realization_from_json(load_json_file(out.string()));
  CHECK(verify_faithful(r).faithful);

  CliRun big = run_cli("construct big --m 4");
  CHECK(big.exit_code == 0);
  REQUIRE(big.parsed);
  CHECK(big.output.at("results").at("vertices") == 8);

  CHECK(run_cli("construct acc --m 2").exit_code == 2);
  CHECK(run_cli("construct big --m 3").exit_code == 2);
  CHECK(run_cli("construct nonsense --m 3").exit_code == 2);
}

TEST_CASE("cli: table reproduces the m=2 verdicts") {
  CliRun run = run_cli("table --m 2 --n-max 7");
  CHECK(run.exit_code == 0);
  REQUIRE(run.parsed);
  const json& results = run.output.at("results");
  CHECK(results.at("4") == "found");
  CHECK(results.at("5") == "found");
  CHECK(results.at("6") == "found");
  CHECK(results.at("7") == "impossible");
}

TEST_CASE("cli: search exit codes distinguish found/impossible/budget") {
  CHECK(run_cli("search --m 2 --cycle 4").exit_code == 0);
  CHECK(run_cli("search --m 2 --cycle 7").exit_code == 1);
  CHECK(run_cli("search --m 3 --cycle 9 --budget 10").exit_code == 2);
  CHECK(run_cli("search --m 2").exit_code == 2);  // needs --cycle or --path
}

TEST_CASE("cli: construct output is accepted unchanged by bound and witness") {
  fs::path c4 = temp_dir() / "c4.json";
  REQUIRE(run_cli("construct c2 --m 2 --out " + c4.string()).exit_code == 0);

  CliRun bound = run_cli("bound --realization " + c4.string() + " --all");
  CHECK(bound.exit_code == 0);
  REQUIRE(bound.parsed);
  const json& rows = bound.output.at("results").at("inequalities");
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row.at("classical_bound") == 2);
    CHECK(std::abs(row.at("quantum_value").get<double>() - 2.8284271247) < 1e-8);
    CHECK(row.at("verdict") == "violated");
  }

  CliRun witness = run_cli("witness --realization " + c4.string() + " --gamma +++-");
  CHECK(witness.exit_code == 0);
  REQUIRE(witness.parsed);
  const json& res = witness.output.at("results");
  CHECK(res.at("inequality") == "+++-");
  CHECK(res.at("witness_state").size() == 4);

  CHECK(run_cli("bound --realization " + c4.string() + " --gamma ++++").exit_code == 2);
  CHECK(run_cli("bound --realization /nonexistent.json --all").exit_code == 2);
}

TEST_CASE("cli: behavior then membership round-trip") {
  fs::path c5 = temp_dir() / "c5b.json";
  REQUIRE(run_cli("construct c2 --m 3 --out " + c5.string()).exit_code == 0);

  StateVector st;
  st.amps.assign(8, {0, 0});
  st.amps[0] = {0.6, 0.0};
  st.amps[7] = {0.0, 0.8};
  fs::path state = temp_dir() / "state.json";
  save_json_file(state.string(), state_to_json(st));

  fs::path model = temp_dir() / "model.json";
  CHECK(run_cli("behavior --realization " + c5.string() + " --state " + state.string() +
                " --out " + model.string())
            .exit_code == 0);

  fs::path jpd = temp_dir() / "jpd.json";
  CliRun mem = run_cli("membership --model " + model.string() + " --out " + jpd.string());
  CHECK(mem.exit_code == 0);
  REQUIRE(mem.parsed);
  CHECK(mem.output.at("results").at("verdict") == "inside");
  CHECK(fs::exists(jpd));
}

TEST_CASE("cli: counterexample report") {
  CliRun run = run_cli("counterexample");
  CHECK(run.exit_code == 0);
  REQUIRE(run.parsed);
  const json& res = run.output.at("results");
  CHECK(std::abs(res.at("lambda_max").get<double>() - 4.2716) < 1e-3);
  CHECK(std::abs(res.at("reference_state_norm").get<double>() - 1.0) < 1e-3);
  CHECK(res.at("reference_state_expectation").get<double>() > 4.0);
  CHECK(res.at("functional_deterministic_max") == 8.0);
  CHECK(res.at("membership") == "inside");
}
