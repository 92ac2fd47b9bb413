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

// Command-line front end: constructions, realizability searches, inequality
// bounds and witnesses, the conjoined-cycles analysis, and polytope
// membership, all as reproducible JSON reports on stdout (diagnostics on
// stderr).  Exit codes: 0 success/verdict, 1 negative search verdict,
// 2 usage error or exhausted budget.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paulicycles/contextuality.hpp"
#include "paulicycles/json_io.hpp"
#include "paulicycles/search.hpp"

namespace {

using namespace paulicycles;

constexpr const char* kVersion = "paulicycles 0.1.0";

// Report numerics carry 10 significant digits so tolerance audits line up
// across runs.
double sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

json state_to_json_sig10(const StateVector& s) {
  json out = json::array();
  for (const auto& a : s.amps) out.push_back({sig10(a.real()), sig10(a.imag())});
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void print_report(const std::string& command, const json& inputs, const json& results,
                  const Timer& timer) {
  json report{{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"versions", kVersion},
              {"wall_time", sig10(timer.seconds())}};
  std::cout << report.dump(2) << "\n";
}

Realization load_cycle_realization(const std::string& path) {
  Realization r = realization_from_json(load_json_file(path));
  if (!r.graph.is_canonical_cycle()) {
    throw std::invalid_argument("realization is not a cycle in canonical numbering");
  }
  if (!verify_faithful(r).faithful) {
    throw std::invalid_argument("realization is not faithful");
  }
  return r;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::impossible: return "impossible";
    default: return "budget";
  }
}

int cmd_construct(const std::string& kind, uint32_t m, const std::string& out_path) {
  Timer timer;
  Realization r;
  if (kind == "acc") {
    r = construct_cycle_baseline(m);
  } else if (kind == "c2") {
    r = construct_cycle_plus2(m);
  } else if (kind == "big") {
    r = construct_big_cycle(m);
  } else if (kind == "path-concat") {
    if (m < 3 || m % 3 != 0) {
      throw std::invalid_argument("path-concat needs m a positive multiple of 3");
    }
    r = h8_path_seed();
    for (uint32_t round = 0; round + 1 < m / 3; ++round) r = concat_paths(r, h8_path_seed());
  } else {
    throw std::invalid_argument("unknown construct kind: " + kind);
  }
  auto report = verify_faithful(r);
  if (!report.faithful) {
    throw std::logic_error("constructed realization failed verify_faithful");
  }
  json rj = realization_to_json(r);
  if (!out_path.empty()) save_json_file(out_path, rj);
  print_report("construct", {{"kind", kind}, {"m", m}},
               {{"realization", rj},
                {"vertices", r.graph.num_vertices()},
                {"faithful", true}},
               timer);
  return 0;
}

int cmd_table(uint32_t m, int n_min, int n_max, double budget, int threads) {
  Timer timer;
  auto table = realizability_table(m, n_min, n_max, (uint64_t)budget, threads);
  json results;
  for (const auto& [n, res] : table) {
    results[std::to_string(n)] = status_name(res.status);
  }
  print_report("table",
               {{"m", m}, {"n_min", n_min}, {"n_max", n_max}, {"budget", budget},
                {"threads", threads}},
               results, timer);
  return 0;
}

int cmd_search(uint32_t m, int cycle, int path, double budget, int threads,
               bool canonicalize, const std::string& out_path) {
  Timer timer;
  SearchConfig cfg;
  cfg.m = m;
  cfg.node_budget = (uint64_t)budget;
  cfg.threads = threads;
  cfg.canonicalize = canonicalize;
  if (cycle > 0) {
    cfg.target = SearchConfig::Target::cycle;
    cfg.size = cycle;
  } else {
    cfg.target = SearchConfig::Target::path;
    cfg.size = path;
  }
  SearchResult res = find_realization(cfg);
  json results{{"status", status_name(res.status)}, {"nodes", res.nodes}};
  if (res.realization) {
    json rj = realization_to_json(*res.realization);
    results["realization"] = rj;
    if (!out_path.empty()) save_json_file(out_path, rj);
  }
  print_report("search",
               {{"m", m}, {"cycle", cycle}, {"path", path}, {"budget", budget},
                {"threads", threads}, {"canonicalize", canonicalize}},
               results, timer);
  switch (res.status) {
    case SearchStatus::found: return 0;
    case SearchStatus::impossible: return 1;
    default: return 2;
  }
}

json inequality_row(const Realization& r, const CycleInequality& ineq, bool with_state) {
  QuantumValue qv = quantum_value(r, ineq);
  json row{{"inequality", ineq.gamma_string()},
           {"classical_bound", ineq.classical_bound()},
           {"quantum_value", sig10(qv.value)},
           {"verdict", qv.value > ineq.classical_bound() + 1e-9 ? "violated" : "satisfied"}};
  if (with_state) row["witness_state"] = state_to_json_sig10(qv.witness);
  return row;
}

int cmd_bound(const std::string& realization_path, bool all, const std::string& gamma) {
  Timer timer;
  Realization r = load_cycle_realization(realization_path);
  json rows = json::array();
  if (all) {
    for (const auto& ineq : cycle_inequalities(r.graph.num_vertices())) {
      rows.push_back(inequality_row(r, ineq, true));
    }
  } else {
    rows.push_back(inequality_row(r, CycleInequality::from_gamma_string(gamma), true));
  }
  print_report("bound", {{"realization", realization_path}, {"gamma", gamma}, {"all", all}},
               {{"inequalities", rows}}, timer);
  return 0;
}

int cmd_witness(const std::string& realization_path, const std::string& gamma) {
  Timer timer;
  Realization r = load_cycle_realization(realization_path);
  auto ineq = CycleInequality::from_gamma_string(gamma);
  json row = inequality_row(r, ineq, true);
  if (r.graph.num_vertices() == 4) {
    StateVector state = tsirelson_state(r, ineq);
    row["product_eigenvalue"] =
        sig10(expectation(state, r.ops[0] * r.ops[1] * r.ops[2] * r.ops[3]));
  }
  print_report("witness", {{"realization", realization_path}, {"gamma", gamma}}, row, timer);
  return 0;
}

int cmd_counterexample() {
  Timer timer;
  CounterexampleReport report = conjoined_counterexample();
  json op_terms = json::array();
  for (const auto& [c, p] : report.op.terms) {
    op_terms.push_back({{"coefficient", c}, {"pauli", p.str()}});
  }
  Scenario sc = Scenario::from_graph(report.realization.graph);
  json results{{"realization", realization_to_json(report.realization)},
               {"operator", op_terms},
               {"lambda_max", sig10(report.lambda_max)},
               {"witness_state", state_to_json_sig10(report.witness)},
               {"reference_state_norm", sig10(report.reference_state_norm)},
               {"reference_state_expectation", sig10(report.reference_state_expectation)},
               {"functional_deterministic_max", sig10(report.functional_deterministic_max)},
               {"membership", report.outside ? "outside" : "inside"}};
  if (report.outside) {
    results["certificate"] = certificate_to_json(report.membership.certificate, sc);
  } else {
    results["jpd"] = jpd_to_json(report.membership.jpd);
  }
  print_report("counterexample", json::object(), results, timer);
  return 0;
}

int cmd_membership(const std::string& model_path, const std::string& out_path) {
  Timer timer;
  EmpiricalModel model = model_from_json(load_json_file(model_path));
  MembershipResult mem = nc_membership(model);
  json results{{"verdict", mem.inside ? "inside" : "outside"}};
  if (mem.inside) {
    json jpd = jpd_to_json(mem.jpd);
    results["jpd"] = jpd;
    if (!out_path.empty()) save_json_file(out_path, jpd);
  } else {
    results["certificate"] = certificate_to_json(mem.certificate, model.scenario);
    results["certificate_value"] = sig10(mem.certificate.evaluate(model));
  }
  print_report("membership", {{"model", model_path}}, results, timer);
  return 0;
}

int cmd_behavior(const std::string& realization_path, const std::string& state_path,
                 const std::string& out_path) {
  Timer timer;
  Realization r = realization_from_json(load_json_file(realization_path));
  if (!verify_faithful(r).faithful) {
    throw std::invalid_argument("realization is not faithful");
  }
  StateVector state = state_from_json(load_json_file(state_path));
  Scenario sc = Scenario::from_graph(r.graph);
  EmpiricalModel model = quantum_behavior(r, state, sc);
  json mj = model_to_json(model);
  if (!out_path.empty()) save_json_file(out_path, mj);
  print_report("behavior", {{"realization", realization_path}, {"state", state_path}},
               {{"model", mj}}, timer);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli realizations of cycle measurement scenarios and their "
               "contextuality analysis"};
  app.require_subcommand(1);

  std::string kind, out_path, realization_path, model_path, state_path, gamma;
  uint32_t m = 2;
  int n_min = 4, n_max = -1, cycle = 0, path = 0, threads = 1;
  double budget = 2e9;
  bool all = false, canonicalize = true;

  auto* construct = app.add_subcommand("construct", "emit a faithful cycle/path realization");
  construct->add_option("kind", kind, "acc | c2 | big | path-concat")->required();
  construct->add_option("--m", m, "qubit count")->required();
  construct->add_option("--out", out_path, "write realization JSON here");

  auto* table = app.add_subcommand("table", "cycle realizability table for fixed m");
  table->add_option("--m", m, "qubit count")->required();
  table->add_option("--n-min", n_min, "smallest cycle size (default 4)");
  table->add_option("--n-max", n_max, "largest cycle size (default 3m+1)");
  table->add_option("--budget", budget, "search node budget per cycle size");
  table->add_option("--threads", threads, "worker threads");

  auto* search = app.add_subcommand("search", "search for one faithful realization");
  search->add_option("--m", m, "qubit count")->required();
  auto* opt_cycle = search->add_option("--cycle", cycle, "cycle size to search");
  search->add_option("--path", path, "path length to search")->excludes(opt_cycle);
  search->add_option("--budget", budget, "node budget");
  search->add_option("--threads", threads, "worker threads");
  search->add_flag("--canonicalize,!--no-canonicalize", canonicalize,
                   "fix the first two vertices up to symmetry (default on)");
  search->add_option("--out", out_path, "write found realization JSON here");

  auto* bound = app.add_subcommand("bound", "quantum values of cycle inequalities");
  bound->add_option("--realization", realization_path, "realization JSON file")->required();
  bound->add_flag("--all,--all-inequalities", all, "evaluate all 2^(n-1) inequalities");
  bound->add_option("--gamma", gamma, "sign vector, e.g. +++-");

  auto* witness = app.add_subcommand("witness", "witness state for one inequality");
  witness->add_option("--realization", realization_path, "realization JSON file")->required();
  witness->add_option("--gamma", gamma, "sign vector, e.g. +++-")->required();

  app.add_subcommand("counterexample", "analyze the conjoined 5-cycles scenario");

  auto* membership = app.add_subcommand("membership", "noncontextual polytope membership");
  membership->add_option("--model", model_path, "empirical model JSON file")->required();
  membership->add_option("--out", out_path, "write the JPD here when inside");

  auto* behavior = app.add_subcommand("behavior", "empirical model of a realization at a state");
  behavior->add_option("--realization", realization_path, "realization JSON file")->required();
  behavior->add_option("--state", state_path, "state JSON file")->required();
  behavior->add_option("--out", out_path, "write the model JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(kind, m, out_path);
    if (table->parsed()) {
      if (n_max < 0) n_max = 3 * (int)m + 1;
      return cmd_table(m, n_min, n_max, budget, threads);
    }
    if (search->parsed()) {
      if (cycle <= 0 && path <= 0) {
        throw std::invalid_argument("search needs --cycle or --path");
      }
      return cmd_search(m, cycle, path, budget, threads, canonicalize, out_path);
    }
    if (bound->parsed()) {
      if (!all && gamma.empty()) {
        throw std::invalid_argument("bound needs --all or --gamma");
      }
      return cmd_bound(realization_path, all, gamma);
    }
    if (witness->parsed()) return cmd_witness(realization_path, gamma);
    if (app.get_subcommand("counterexample")->parsed()) return cmd_counterexample();
    if (membership->parsed()) return cmd_membership(model_path, out_path);
    if (behavior->parsed()) return cmd_behavior(realization_path, state_path, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
