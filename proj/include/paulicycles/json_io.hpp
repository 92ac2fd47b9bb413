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

#ifndef PAULICYCLES_JSON_IO_HPP
#define PAULICYCLES_JSON_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "paulicycles/contextuality.hpp"
#include "paulicycles/empirical.hpp"
#include "paulicycles/graph.hpp"
#include "paulicycles/realization.hpp"
#include "paulicycles/spectral.hpp"

namespace paulicycles {

using json = nlohmann::json;

// Graph format: {"n": int, "edges": [[i, j], ...]}.
inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.num_vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

// Realization format: {"m": int, "graph": {...}, "paulis": ["XI", ...]},
// vertex order matching graph numbering.
inline json realization_to_json(const Realization& r) {
  json paulis = json::array();
  for (const auto& p : r.ops) paulis.push_back(p.str());
  return json{{"m", r.num_qubits}, {"graph", graph_to_json(r.graph)}, {"paulis", paulis}};
}

inline Realization realization_from_json(const json& j) {
  Graph g = graph_from_json(j.at("graph"));
  std::vector<PhasedPauli> ops;
  for (const auto& s : j.at("paulis")) {
    ops.push_back(PhasedPauli::parse(s.get<std::string>()));
  }
  Realization r(std::move(g), std::move(ops));
  if (r.num_qubits != j.at("m").get<uint32_t>()) {
    throw std::invalid_argument("realization JSON: m does not match pauli strings");
  }
  return r;
}

// States serialize as arrays of [re, im] pairs in the computational basis,
// qubit 1 most significant.
inline json state_to_json(const StateVector& s) {
  json out = json::array();
  for (const auto& a : s.amps) out.push_back({a.real(), a.imag()});
  return out;
}

inline StateVector state_from_json(const json& j) {
  StateVector s;
  for (const auto& pair : j) {
    s.amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return s;
}

inline std::string outcome_string(size_t outcome, size_t arity) {
  std::string s(arity, '+');
  for (size_t t = 0; t < arity; ++t) {
    if ((outcome >> t) & 1u) s[t] = '-';
  }
  return s;
}

inline size_t outcome_from_string(const std::string& s) {
  size_t o = 0;
  for (size_t t = 0; t < s.size(); ++t) {
    if (s[t] == '-') {
      o |= size_t{1} << t;
    } else if (s[t] != '+') {
      throw std::invalid_argument("outcome string must contain only + and -");
    }
  }
  return o;
}

// Empirical model format:
// {"graph": {...}, "tables": [{"context": [u, v, ...],
//                              "probs": {"++": p, "+-": p, ...}}, ...]}.
// Contexts are the maximal cliques of the graph; character t of an outcome
// key belongs to the t-th vertex of the sorted context.
inline json model_to_json(const EmpiricalModel& model) {
  json tables = json::array();
  for (size_t c = 0; c < model.scenario.contexts.size(); ++c) {
    json probs;
    const auto& ctx = model.scenario.contexts[c];
    for (size_t o = 0; o < model.tables[c].size(); ++o) {
      probs[outcome_string(o, ctx.size())] = model.tables[c][o];
    }
    tables.push_back({{"context", ctx}, {"probs", probs}});
  }
  return json{{"graph", graph_to_json(model.scenario.graph)}, {"tables", tables}};
}

inline EmpiricalModel model_from_json(const json& j) {
  EmpiricalModel model;
  model.scenario = Scenario::from_graph(graph_from_json(j.at("graph")));
  model.tables.assign(model.scenario.contexts.size(), {});
  for (const auto& entry : j.at("tables")) {
    std::vector<int> ctx = entry.at("context").get<std::vector<int>>();
    std::sort(ctx.begin(), ctx.end());
    int c = model.context_index(ctx);
    if (c < 0) {
      throw std::invalid_argument("model JSON: listed context is not a maximal clique");
    }
    std::vector<double> table(size_t{1} << ctx.size(), 0.0);
    for (const auto& [key, value] : entry.at("probs").items()) {
      if (key.size() != ctx.size()) {
        throw std::invalid_argument("model JSON: outcome key arity mismatch");
      }
      table[outcome_from_string(key)] = value.get<double>();
    }
    model.tables[c] = std::move(table);
  }
  for (size_t c = 0; c < model.tables.size(); ++c) {
    if (model.tables[c].empty()) {
      throw std::invalid_argument("model JSON: missing table for a context");
    }
  }
  return model;
}

inline json jpd_to_json(const JointDistribution& jpd) {
  json weights = json::array();
  for (size_t s = 0; s < jpd.weights.size(); ++s) {
    if (jpd.weights[s] > 1e-15) {
      weights.push_back({{"outcomes", outcome_string(s, jpd.num_vertices)},
                         {"weight", jpd.weights[s]}});
    }
  }
  return json{{"n", jpd.num_vertices}, {"weights", weights}};
}

inline json certificate_to_json(const GeneralInequality& cert, const Scenario& sc) {
  json rows = json::array();
  for (size_t c = 0; c < cert.coefficients.size(); ++c) {
    json values;
    for (size_t o = 0; o < cert.coefficients[c].size(); ++o) {
      values[outcome_string(o, sc.contexts[c].size())] = cert.coefficients[c][o];
    }
    rows.push_back({{"context", sc.contexts[c]}, {"values", values}});
  }
  return json{{"bound", cert.bound}, {"coefficients", rows}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace paulicycles

#endif  // PAULICYCLES_JSON_IO_HPP
