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

#ifndef PAULICYCLES_EMPIRICAL_HPP
#define PAULICYCLES_EMPIRICAL_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulicycles/graph.hpp"

namespace paulicycles {

/// Per-context joint outcome distributions over +-1 outcomes.
///
/// tables[c][o] is the probability of outcome tuple o in context c, where
/// bit t of o set means vertex scenario.contexts[c][t] produced outcome -1.
/// Each table sums to 1 and overlapping contexts must agree on shared
/// marginals (no-disturbance).
struct EmpiricalModel {
  Scenario scenario;
  std::vector<std::vector<double>> tables;

  const std::vector<double>& table(size_t c) const { return tables.at(c); }

  int context_index(const std::vector<int>& context) const {
    for (size_t c = 0; c < scenario.contexts.size(); ++c) {
      if (scenario.contexts[c] == context) return (int)c;
    }
    return -1;
  }
};

/// Marginal of one context table onto a subset of its vertices.  The subset
/// is given by positions into the context; the result is indexed by the
/// packed bits of those positions in order.
inline std::vector<double> table_marginal(const std::vector<double>& table,
                                          const std::vector<int>& positions) {
  std::vector<double> out(size_t{1} << positions.size(), 0.0);
  for (size_t o = 0; o < table.size(); ++o) {
    size_t key = 0;
    for (size_t t = 0; t < positions.size(); ++t) {
      key |= ((o >> positions[t]) & 1u) << t;
    }
    out[key] += table[o];
  }
  return out;
}

/// Throws if any table fails to sum to 1 or any pair of overlapping contexts
/// disagrees on the shared marginal beyond tol.
inline void check_no_disturbance(const EmpiricalModel& model, double tol = 1e-9) {
  const auto& ctxs = model.scenario.contexts;
  if (model.tables.size() != ctxs.size()) {
    throw std::invalid_argument("EmpiricalModel: table/context count mismatch");
  }
  for (size_t c = 0; c < ctxs.size(); ++c) {
    if (model.tables[c].size() != size_t{1} << ctxs[c].size()) {
      throw std::invalid_argument("EmpiricalModel: table size mismatch");
    }
    double sum = 0;
    for (double p : model.tables[c]) {
      if (p < -tol) throw std::invalid_argument("EmpiricalModel: negative probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw std::invalid_argument("EmpiricalModel: table does not sum to 1");
    }
  }
  for (size_t a = 0; a < ctxs.size(); ++a) {
    for (size_t b = a + 1; b < ctxs.size(); ++b) {
      std::vector<int> pos_a, pos_b;
      for (size_t i = 0; i < ctxs[a].size(); ++i) {
        for (size_t j = 0; j < ctxs[b].size(); ++j) {
          if (ctxs[a][i] == ctxs[b][j]) {
            pos_a.push_back((int)i);
            pos_b.push_back((int)j);
          }
        }
      }
      if (pos_a.empty()) continue;
      auto ma = table_marginal(model.tables[a], pos_a);
      auto mb = table_marginal(model.tables[b], pos_b);
      for (size_t k = 0; k < ma.size(); ++k) {
        if (std::abs(ma[k] - mb[k]) > tol) {
          throw std::invalid_argument(
              "EmpiricalModel: no-disturbance violated between contexts " +
              std::to_string(a) + " and " + std::to_string(b));
        }
      }
    }
  }
}

/// A probability distribution over global +-1 outcome assignments (bit v set
/// means vertex v produced outcome -1).  The existence of such a
/// distribution reproducing every context table is exactly noncontextuality.
struct JointDistribution {
  int num_vertices = 0;
  std::vector<double> weights;  // size 2^num_vertices

  double context_probability(const std::vector<int>& context, size_t outcome) const {
    double total = 0;
    for (size_t s = 0; s < weights.size(); ++s) {
      size_t key = 0;
      for (size_t t = 0; t < context.size(); ++t) {
        key |= ((s >> context[t]) & 1u) << t;
      }
      if (key == outcome) total += weights[s];
    }
    return total;
  }

  /// Marginal onto a vertex subset, indexed by packed bits in subset order.
  std::vector<double> marginal(const std::vector<int>& vertices) const {
    std::vector<double> out(size_t{1} << vertices.size(), 0.0);
    for (size_t s = 0; s < weights.size(); ++s) {
      size_t key = 0;
      for (size_t t = 0; t < vertices.size(); ++t) {
        key |= ((s >> vertices[t]) & 1u) << t;
      }
      out[key] += weights[s];
    }
    return out;
  }

  bool reproduces(const EmpiricalModel& model, double tol) const {
    for (size_t c = 0; c < model.scenario.contexts.size(); ++c) {
      auto got = marginal(model.scenario.contexts[c]);
      for (size_t o = 0; o < got.size(); ++o) {
        if (std::abs(got[o] - model.tables[c][o]) > tol) return false;
      }
    }
    return true;
  }
};

}  // namespace paulicycles

#endif  // PAULICYCLES_EMPIRICAL_HPP
