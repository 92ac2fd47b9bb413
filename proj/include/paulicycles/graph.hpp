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

#ifndef PAULICYCLES_GRAPH_HPP
#define PAULICYCLES_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace paulicycles {

/// Simple undirected graph on vertices 0..n-1, no self-loops, at most 64
/// vertices (adjacency is kept as one 64-bit row per vertex).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64) {
      throw std::invalid_argument("Graph: vertex count must be in [0, 64]");
    }
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int num_vertices() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int num_edges() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  /// Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
      uint64_t later = adj_[u] >> (u + 1) << (u + 1);
      while (later) {
        int v = std::countr_zero(later);
        later &= later - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  /// Cycle C_n: vertices 0..n-1, edges {i, i+1 mod n}.  Requires n >= 3.
  static Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }

  /// Path H_l: vertices 0..l-1, edges {i, i+1}.  Requires l >= 2.
  static Graph path(int l) {
    if (l < 2) throw std::invalid_argument("path graph needs l >= 2");
    Graph g(l);
    for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
    return g;
  }

  /// True when the graph is a cycle in canonical numbering (edge {i, i+1 mod n}).
  bool is_canonical_cycle() const {
    if (n_ < 3 || num_edges() != n_) return false;
    for (int i = 0; i < n_; ++i) {
      if (!adjacent(i, (i + 1) % n_)) return false;
    }
    return true;
  }

  /// True when the graph is a path in canonical numbering (edge {i, i+1}).
  bool is_canonical_path() const {
    if (n_ < 2 || num_edges() != n_ - 1) return false;
    for (int i = 0; i + 1 < n_; ++i) {
      if (!adjacent(i, i + 1)) return false;
    }
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_ = 0;
  std::vector<uint64_t> adj_;
};

/// Disjoint union of g1 and g2 with vertex pairs (v1 in g1, v2 in g2) merged.
/// Result keeps g1's numbering; unidentified g2 vertices follow in g2 order.
/// The identification must be injective on both sides.
inline Graph glue(const Graph& g1, const Graph& g2,
                  const std::vector<std::pair<int, int>>& identification) {
  std::vector<int> map2(g2.num_vertices(), -1);
  std::vector<bool> used1(g1.num_vertices(), false);
  for (auto [v1, v2] : identification) {
    if (v1 < 0 || v1 >= g1.num_vertices() || v2 < 0 || v2 >= g2.num_vertices()) {
      throw std::invalid_argument("glue: identified vertex out of range");
    }
    if (used1[v1] || map2[v2] != -1) {
      throw std::invalid_argument("glue: identification is not injective");
    }
    used1[v1] = true;
    map2[v2] = v1;
  }
  int next = g1.num_vertices();
  for (int v = 0; v < g2.num_vertices(); ++v) {
    if (map2[v] == -1) map2[v] = next++;
  }
  Graph out(next);
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) {
    if (!out.adjacent(map2[u], map2[v])) out.add_edge(map2[u], map2[v]);
  }
  return out;
}

/// All chordless cycles of length 4..max_len, each reported once up to
/// rotation and reflection (listed starting from its smallest vertex).
/// Exhaustive DFS; intended for small graphs (|V| <= 20).
inline std::vector<std::vector<int>> induced_cycles(const Graph& g, int max_len) {
  std::vector<std::vector<int>> out;
  int n = g.num_vertices();
  std::vector<int> path;
  // Invariants along the DFS: path[0] is the smallest vertex of any cycle it
  // can close into; every vertex is non-adjacent to all path vertices except
  // its predecessor (chordlessness), and closure back to path[0] is only
  // accepted at length >= 4 with path[1] < path.back() to kill reflections.
  auto extend = [&](auto&& self, uint64_t on_path) -> void {
    int last = path.back();
    int start = path[0];
    uint64_t cand = g.neighbors(last);
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      if (u <= start || ((on_path >> u) & 1u)) continue;
      // u adjacent to start closes a cycle; adjacency to any interior vertex
      // is a chord.
      bool closes = g.adjacent(u, start);
      bool interior_chord = false;
      for (size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(u, path[i])) {
          interior_chord = true;
          break;
        }
      }
      if (interior_chord) continue;
      if (closes) {
        if (path.size() + 1 >= 4 && path[1] < u) {
          auto cyc = path;
          cyc.push_back(u);
          out.push_back(std::move(cyc));
        }
        continue;  // a closing vertex cannot extend a chordless path further
      }
      if ((int)path.size() + 1 < max_len) {
        path.push_back(u);
        self(self, on_path | (uint64_t{1} << u));
        path.pop_back();
      }
    }
  };
  if (max_len >= 4) {
    for (int s = 0; s < n; ++s) {
      path.assign(1, s);
      uint64_t on_path = uint64_t{1} << s;
      uint64_t firsts = g.neighbors(s);
      while (firsts) {
        int u = std::countr_zero(firsts);
        firsts &= firsts - 1;
        if (u <= s) continue;
        path.push_back(u);
        extend(extend, on_path | (uint64_t{1} << u));
        path.pop_back();
      }
    }
  }
  return out;
}

/// Chordality test via maximum-cardinality search plus perfect elimination
/// ordering verification.  A chordal compatibility graph admits only
/// noncontextual behaviours (Vorob'ev), so this doubles as that gate.
inline bool is_chordal(const Graph& g) {
  int n = g.num_vertices();
  if (n <= 2) return true;
  std::vector<int> weight(n, 0), order(n, -1), pos(n, -1);
  std::vector<bool> numbered(n, false);
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    order[i] = best;
    pos[best] = i;
    uint64_t nb = g.neighbors(best);
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (!numbered[v]) ++weight[v];
    }
  }
  // order is a candidate PEO; verify it.
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    uint64_t later = 0;
    uint64_t nb = g.neighbors(v);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (pos[w] > i) later |= uint64_t{1} << w;
    }
    if (later == 0) continue;
    int first = -1;
    uint64_t t = later;
    while (t) {
      int w = std::countr_zero(t);
      t &= t - 1;
      if (first == -1 || pos[w] < pos[first]) first = w;
    }
    uint64_t rest = later & ~(uint64_t{1} << first);
    if ((rest & ~g.neighbors(first)) != 0) return false;
  }
  return true;
}

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically.  For triangle-free graphs this is the edge set.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.num_vertices();
  auto bk = [&](auto&& self, uint64_t r, uint64_t p, uint64_t x) -> void {
    if (p == 0 && x == 0) {
      std::vector<int> clique;
      while (r) {
        clique.push_back(std::countr_zero(r));
        r &= r - 1;
      }
      out.push_back(std::move(clique));
      return;
    }
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    uint64_t t = px;
    while (t) {
      int u = std::countr_zero(t);
      t &= t - 1;
      int cnt = std::popcount(p & g.neighbors(u));
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    uint64_t ext = p & ~g.neighbors(pivot);
    while (ext) {
      int v = std::countr_zero(ext);
      ext &= ext - 1;
      uint64_t vb = uint64_t{1} << v;
      self(self, r | vb, p & g.neighbors(v), x & g.neighbors(v));
      p &= ~vb;
      x |= vb;
    }
  };
  uint64_t all = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  if (n > 0) bk(bk, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// A measurement scenario: a compatibility graph with contexts given by its
/// maximal cliques.
struct Scenario {
  Graph graph;
  std::vector<std::vector<int>> contexts;

  static Scenario from_graph(Graph g) {
    Scenario sc;
    sc.contexts = maximal_cliques(g);
    sc.graph = std::move(g);
    return sc;
  }
};

}  // namespace paulicycles

#endif  // PAULICYCLES_GRAPH_HPP
