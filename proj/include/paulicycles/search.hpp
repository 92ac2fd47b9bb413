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

#ifndef PAULICYCLES_SEARCH_HPP
#define PAULICYCLES_SEARCH_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "paulicycles/graph.hpp"
#include "paulicycles/realization.hpp"

namespace paulicycles {

struct SearchConfig {
  enum class Target { cycle, path };

  uint32_t m = 2;
  Target target = Target::cycle;
  int size = 4;  // cycle size n or path length l
  bool canonicalize = true;
  uint64_t node_budget = 2'000'000'000;
  int threads = 1;
};

enum class SearchStatus { found, impossible, budget };

struct SearchResult {
  SearchStatus status = SearchStatus::impossible;
  std::optional<Realization> realization;
  uint64_t nodes = 0;
};

namespace detail {

struct XZ {
  uint64_t x, z;
  friend bool operator==(const XZ&, const XZ&) = default;
};

inline bool xz_commutes(const XZ& a, const XZ& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

// Depth-first extension of partial vertex assignments over the positive-phase
// non-identity alphabet.  Candidates are tried in increasing (z||x) order so
// single-threaded runs are deterministic.
struct GraphSearcher {
  const Graph& g;
  uint32_t m;
  std::vector<int> order;          // placement order (a BFS order of g)
  std::vector<uint64_t> adj_mask;  // adjacency among order positions
  bool forbid_duplicates;
  std::atomic<uint64_t>& nodes;
  uint64_t node_budget;
  std::atomic<bool>& stop;

  std::vector<XZ> placed;
  std::optional<std::vector<XZ>> found;
  bool budget_hit = false;

  GraphSearcher(const Graph& graph, uint32_t qubits, std::atomic<uint64_t>& node_counter,
                uint64_t budget, std::atomic<bool>& stop_flag)
      : g(graph),
        m(qubits),
        forbid_duplicates(!has_adjacent_twins(graph)),
        nodes(node_counter),
        node_budget(budget),
        stop(stop_flag) {
    int n = g.num_vertices();
    // BFS placement order: every vertex after the first is adjacent to an
    // already placed one, which keeps the commutation pruning tight.
    std::vector<bool> seen(n, false);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      queue.push_back(root);
      seen[root] = true;
      for (size_t head = queue.size() - 1; head < queue.size(); ++head) {
        uint64_t nb = g.neighbors(queue[head]);
        while (nb) {
          int w = std::countr_zero(nb);
          nb &= nb - 1;
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    order = std::move(queue);
    adj_mask.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < a; ++b) {
        if (g.adjacent(order[a], order[b])) adj_mask[a] |= uint64_t{1} << b;
      }
    }
    placed.reserve(n);
  }

  // Two adjacent vertices with identical closed neighbourhoods may carry the
  // same operator; otherwise faithfulness forces injectivity and duplicate
  // candidates can be pruned.
  static bool has_adjacent_twins(const Graph& graph) {
    for (auto [u, v] : graph.edges()) {
      uint64_t cu = graph.neighbors(u) | (uint64_t{1} << u);
      uint64_t cv = graph.neighbors(v) | (uint64_t{1} << v);
      if (cu == cv) return true;
    }
    return false;
  }

  bool admissible(const XZ& cand, size_t level) const {
    for (size_t j = level; j-- > 0;) {
      bool expect = (adj_mask[level] >> j) & 1u;
      if (xz_commutes(cand, placed[j]) != expect) return false;
      if (forbid_duplicates && cand == placed[j]) return false;
    }
    return true;
  }

  bool dfs(size_t level) {
    if (level == order.size()) {
      found = placed;
      return true;
    }
    uint64_t count = (uint64_t{1} << (2 * m)) - 1;
    for (uint64_t code = 1; code <= count; ++code) {
      if (stop.load(std::memory_order_relaxed)) return false;
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= node_budget) {
        budget_hit = true;
        return false;
      }
      XZ cand{code & ((uint64_t{1} << m) - 1), code >> m};
      if (!admissible(cand, level)) continue;
      placed.push_back(cand);
      if (dfs(level + 1)) return true;
      placed.pop_back();
    }
    return false;
  }

  Realization to_realization() const {
    int n = g.num_vertices();
    std::vector<PhasedPauli> ops(n, PhasedPauli::identity(m));
    for (int pos = 0; pos < n; ++pos) {
      ops[order[pos]] = PhasedPauli(m, (*found)[pos].x, (*found)[pos].z, 0);
    }
    return Realization(g, std::move(ops));
  }
};

}  // namespace detail

/// Backtracking search for a faithful m-qubit realization of an arbitrary
/// graph.  The alphabet contains only positive-phase representatives, since
/// signs never change commutation.  With canonicalize set, vertex 0 is fixed
/// to X(x)I..I and the adjacent vertex placed next is fixed to I(x)X(x)I..I:
/// the symplectic group acts transitively on nonzero vectors, and the
/// stabilizer of the first vector acts transitively on the rest of its
/// perp (Witt extension), so this cut is verdict-preserving whenever the
/// graph has at least 3 vertices and no adjacent twins.
inline SearchResult find_graph_realization(const Graph& g, uint32_t m,
                                           bool canonicalize = true,
                                           uint64_t node_budget = 2'000'000'000,
                                           int threads = 1) {
  if (m == 0 || m > 16) {
    throw std::invalid_argument("find_graph_realization: m must be in [1, 16]");
  }
  if (g.num_vertices() < 2) {
    throw std::invalid_argument("find_graph_realization: need at least 2 vertices");
  }
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  detail::GraphSearcher proto(g, m, nodes, node_budget, stop);
  bool canonical = canonicalize && g.num_vertices() >= 3 && proto.forbid_duplicates;

  size_t fixed_levels = 0;
  std::vector<detail::XZ> prefix;
  if (canonical) {
    // Second representative depends on whether the second placed vertex must
    // commute (adjacent: I X I..) or anticommute (Z I..) with the first.
    bool second_adjacent = (proto.adj_mask[1] & 1u) != 0;
    prefix = {detail::XZ{1, 0},
              second_adjacent ? detail::XZ{m >= 2 ? 2u : 1u, 0} : detail::XZ{0, 1}};
    if (m == 1 && second_adjacent) prefix.pop_back();  // lone qubit: no second X
    fixed_levels = prefix.size();
  }

  int worker_count = std::max(1, threads);
  // Work is split on the candidate set of the first free level; each branch
  // is independent, sharing only the node counter and a first-writer-wins
  // result slot.  Deterministic output needs threads == 1.
  uint64_t alphabet = (uint64_t{1} << (2 * m)) - 1;
  std::mutex result_mutex;
  std::optional<Realization> result;
  std::atomic<bool> any_budget{false};

  auto run_branch = [&](uint64_t first_code) {
    detail::GraphSearcher s(g, m, nodes, node_budget, stop);
    for (const auto& p : prefix) {
      if (!s.admissible(p, s.placed.size())) return;
      s.placed.push_back(p);
    }
    if (first_code != 0) {
      detail::XZ cand{first_code & ((uint64_t{1} << m) - 1), first_code >> m};
      if (!s.admissible(cand, s.placed.size())) return;
      s.placed.push_back(cand);
    }
    if (s.dfs(s.placed.size())) {
      std::lock_guard<std::mutex> lock(result_mutex);
      if (!result) {
        result = s.to_realization();
        stop.store(true);
      }
    }
    if (s.budget_hit) any_budget.store(true);
  };

  if (worker_count == 1 || (int)g.num_vertices() <= (int)fixed_levels) {
    detail::GraphSearcher s(g, m, nodes, node_budget, stop);
    bool prefix_ok = true;
    for (const auto& p : prefix) {
      if (!s.admissible(p, s.placed.size())) {
        prefix_ok = false;
        break;
      }
      s.placed.push_back(p);
    }
    if (prefix_ok && s.dfs(s.placed.size())) {
      result = s.to_realization();
    }
    if (s.budget_hit) any_budget.store(true);
  } else {
    std::vector<std::thread> pool;
    std::atomic<uint64_t> next_code{1};
    for (int t = 0; t < worker_count; ++t) {
      pool.emplace_back([&] {
        while (!stop.load()) {
          uint64_t code = next_code.fetch_add(1);
          if (code > alphabet) break;
          run_branch(code);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SearchResult out;
  out.nodes = nodes.load();
  if (result) {
    out.status = SearchStatus::found;
    out.realization = std::move(result);
  } else if (any_budget.load()) {
    out.status = SearchStatus::budget;
  } else {
    out.status = SearchStatus::impossible;
  }
  return out;
}

/// Searches for a faithful m-qubit Pauli realization of the configured cycle
/// or path.  Cycles larger than 3m are rejected up front (no such faithful
/// realization exists: the witness-set bound), reported as a completed
/// impossibility rather than a budget stop.
inline SearchResult find_realization(const SearchConfig& cfg) {
  if (cfg.target == SearchConfig::Target::cycle) {
    if (cfg.size < 3) throw std::invalid_argument("find_realization: cycle size >= 3");
    if ((uint32_t)cfg.size > 3 * cfg.m) {
      return SearchResult{SearchStatus::impossible, std::nullopt, 0};
    }
    return find_graph_realization(Graph::cycle(cfg.size), cfg.m, cfg.canonicalize,
                                  cfg.node_budget, cfg.threads);
  }
  if (cfg.size < 2) throw std::invalid_argument("find_realization: path length >= 2");
  return find_graph_realization(Graph::path(cfg.size), cfg.m, cfg.canonicalize,
                                cfg.node_budget, cfg.threads);
}

/// Runs find_realization for every cycle size in [n_min, n_max] and collects
/// the verdicts.  Budget stops are reported as such, never guessed.
inline std::map<int, SearchResult> realizability_table(uint32_t m, int n_min, int n_max,
                                                       uint64_t node_budget = 2'000'000'000,
                                                       int threads = 1) {
  std::map<int, SearchResult> table;
  for (int n = n_min; n <= n_max; ++n) {
    SearchConfig cfg;
    cfg.m = m;
    cfg.target = SearchConfig::Target::cycle;
    cfg.size = n;
    cfg.node_budget = node_budget;
    cfg.threads = threads;
    table.emplace(n, find_realization(cfg));
  }
  return table;
}

}  // namespace paulicycles

#endif  // PAULICYCLES_SEARCH_HPP
