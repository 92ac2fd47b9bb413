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
#include <random>

#include "oracles.hpp"
#include "paulicycles/contextuality.hpp"
#include "paulicycles/graph.hpp"

using namespace paulicycles;

TEST_CASE("cycle and path constructors") {
  Graph c3 = Graph::cycle(3);
  CHECK(c3.num_edges() == 3);
  Graph c4 = Graph::cycle(4);
  CHECK(c4.num_edges() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  Graph c7 = Graph::cycle(7);
  for (int v = 0; v < 7; ++v) CHECK(c7.degree(v) == 2);
  CHECK(Graph::path(3).num_edges() == 2);
  CHECK(Graph::path(8).num_edges() == 7);
  CHECK(Graph::path(2).num_edges() == 1);
  CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph::path(1), std::invalid_argument);
}

TEST_CASE("gluing two 5-cycles") {
  Graph one_vertex = glue(Graph::cycle(5), Graph::cycle(5), {{0, 0}});
  CHECK(one_vertex.num_vertices() == 9);
  CHECK(one_vertex.num_edges() == 10);

  Graph one_edge = glue(Graph::cycle(5), Graph::cycle(5), {{0, 0}, {1, 1}});
  CHECK(one_edge.num_vertices() == 8);
  CHECK(one_edge.num_edges() == 9);

  // two edges shared: identify the path 0-1-2 of both cycles
  Graph two_edges = glue(Graph::cycle(5), Graph::cycle(5), {{0, 0}, {1, 1}, {2, 2}});
  CHECK(two_edges.num_vertices() == 7);
  CHECK(two_edges.num_edges() == 8);

  CHECK_THROWS_AS(glue(Graph::cycle(5), Graph::cycle(5), {{0, 0}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(glue(Graph::cycle(5), Graph::cycle(5), {{0, 0}, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("glue preserves degrees outside the identified set") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g1 = oracle::random_graph(rng, 6);
    Graph g2 = oracle::random_graph(rng, 6);
    if (g1.num_vertices() < 2 || g2.num_vertices() < 2) continue;
    Graph glued = glue(g1, g2, {{0, 0}});
    for (int v = 1; v < g1.num_vertices(); ++v) CHECK(glued.degree(v) == g1.degree(v));
    // unidentified g2 vertices are appended after g1's block in g2 order
    int next = g1.num_vertices();
    for (int v = 1; v < g2.num_vertices(); ++v) CHECK(glued.degree(next++) == g2.degree(v));
  }
}

TEST_CASE("chordality basics") {
  CHECK(is_chordal(Graph::cycle(3)));
  CHECK_FALSE(is_chordal(Graph::cycle(4)));
  CHECK(is_chordal(Graph::path(6)));
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(is_chordal(k4));
}

TEST_CASE("chordality matches brute-force induced-cycle enumeration") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(rng, 10);
    bool brute_empty = oracle::brute_force_induced_cycles(g, g.num_vertices()).empty();
    CHECK(is_chordal(g) == brute_empty);
    CHECK(induced_cycles(g, g.num_vertices()).empty() == brute_empty);
  }
}

TEST_CASE("induced cycle enumeration matches brute force") {
  CHECK(induced_cycles(Graph::cycle(5), 5).size() == 1);
  CHECK(induced_cycles(Graph::cycle(5), 5)[0].size() == 5);
  CHECK(induced_cycles(Graph::path(8), 8).empty());

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 9);
    auto got = induced_cycles(g, g.num_vertices());
    auto expect = oracle::brute_force_induced_cycles(g, g.num_vertices());
    REQUIRE(got.size() == expect.size());
    // same vertex sets
    auto canon = [](std::vector<std::vector<int>> cycles) {
      for (auto& c : cycles) std::sort(c.begin(), c.end());
      std::sort(cycles.begin(), cycles.end());
      return cycles;
    };
    CHECK(canon(got) == canon(expect));
  }
}

TEST_CASE("the conjoined-5-cycles graph has two induced 5-cycles, no 4-cycles") {
  Graph g = conjoined_cycles_realization().graph;
  auto cycles = induced_cycles(g, 7);
  int fours = 0, fives = 0;
  for (const auto& c : cycles) {
    if (c.size() == 4) ++fours;
    if (c.size() == 5) ++fives;
  }
  CHECK(fours == 0);
  CHECK(fives == 2);
  CHECK_FALSE(is_chordal(g));
  // triangle-free, so the contexts are exactly the 8 edges
  auto cliques = maximal_cliques(g);
  CHECK(cliques.size() == 8);
  for (const auto& c : cliques) CHECK(c.size() == 2);
}

TEST_CASE("maximal cliques") {
  auto c4 = maximal_cliques(Graph::cycle(4));
  CHECK(c4 == std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  auto tri = maximal_cliques(Graph::cycle(3));
  CHECK(tri == std::vector<std::vector<int>>{{0, 1, 2}});
  // pivoting result matches a brute-force maximality filter on random graphs
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(rng, 8);
    auto cliques = maximal_cliques(g);
    for (const auto& c : cliques) {
      uint64_t mask = 0;
      for (int v : c) mask |= uint64_t{1} << v;
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) CHECK(g.adjacent(c[i], c[j]));
      for (int v = 0; v < g.num_vertices(); ++v) {
        if ((mask >> v) & 1u) continue;
        CHECK((g.neighbors(v) & mask) != mask);  // no vertex extends it
      }
    }
    // every vertex appears in at least one clique
    uint64_t covered = 0;
    for (const auto& c : cliques)
      for (int v : c) covered |= uint64_t{1} << v;
    if (g.num_vertices() > 0) {
      CHECK(covered == (g.num_vertices() >= 64 ? ~uint64_t{0}
                                               : (uint64_t{1} << g.num_vertices()) - 1));
    }
  }
}

TEST_CASE("scenario contexts are the maximal cliques") {
  Scenario sc = Scenario::from_graph(Graph::cycle(5));
  CHECK(sc.contexts.size() == 5);
  for (const auto& c : sc.contexts) CHECK(c.size() == 2);
}
