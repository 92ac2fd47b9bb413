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

#ifndef PAULICYCLES_REALIZATION_HPP
#define PAULICYCLES_REALIZATION_HPP

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "paulicycles/graph.hpp"
#include "paulicycles/pauli.hpp"

namespace paulicycles {

/// A vertex -> Pauli assignment over a compatibility graph.
///
/// A realization is *faithful* when assigned operators commute if and only if
/// their vertices are equal or adjacent.  Operators must be Hermitian; an
/// identity-letter operator is legal only where the vertex is adjacent to all
/// others (e.g. the middle of the X - I - Y three-node path), since
/// faithfulness rules it out everywhere else.
struct Realization {
  Graph graph;
  std::vector<PhasedPauli> ops;
  uint32_t num_qubits = 0;

  Realization() = default;
  Realization(Graph g, std::vector<PhasedPauli> assigned)
      : graph(std::move(g)), ops(std::move(assigned)) {
    if (ops.empty()) throw std::invalid_argument("Realization: no operators");
    num_qubits = ops.front().num_qubits();
    for (const auto& p : ops) {
      if (p.num_qubits() != num_qubits) {
        throw std::invalid_argument("Realization: mixed qubit counts");
      }
      if (!p.is_hermitian()) {
        throw std::invalid_argument("Realization: non-Hermitian operator " +
                                    p.str());
      }
    }
  }

  static Realization from_strings(Graph g, std::initializer_list<const char*> rows) {
    std::vector<PhasedPauli> ops;
    for (const char* row : rows) ops.push_back(PhasedPauli::parse(row));
    return Realization(std::move(g), std::move(ops));
  }
};

struct FaithfulnessViolation {
  int v;
  int w;
  bool should_commute;
};

struct FaithfulnessReport {
  bool faithful = false;
  std::vector<FaithfulnessViolation> violations;
};

/// Exhaustive pairwise check of the commute-iff-adjacent contract.  For
/// faithful cycle realizations of size >= 4 injectivity is asserted (it is
/// implied, so a failure signals a bug).
inline FaithfulnessReport verify_faithful(const Realization& r) {
  int n = r.graph.num_vertices();
  if ((int)r.ops.size() != n) {
    throw std::invalid_argument("verify_faithful: missing vertex assignment");
  }
  FaithfulnessReport report;
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      bool expect = r.graph.adjacent(v, w);
      bool actual = commutes(r.ops[v], r.ops[w]);
      if (expect != actual) {
        report.violations.push_back({v, w, expect});
      }
    }
  }
  report.faithful = report.violations.empty();
  if (report.faithful && n >= 4 && r.graph.is_canonical_cycle()) {
    for (int v = 0; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        if (r.ops[v].same_letters(r.ops[w])) {
          throw std::logic_error(
              "verify_faithful: faithful cycle realization is not injective");
        }
      }
    }
  }
  return report;
}

/// Edge Paulis L_i = P_i * P_{i+1 mod n} of a cycle realization, in cycle
/// order, phases tracked (each is Hermitian with a +-1 sign).
inline std::vector<PhasedPauli> edge_paulis(const Realization& r) {
  if (!r.graph.is_canonical_cycle()) {
    throw std::invalid_argument("edge_paulis: not a cycle realization");
  }
  int n = r.graph.num_vertices();
  std::vector<PhasedPauli> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(r.ops[i] * r.ops[(i + 1) % n]);
  }
  return out;
}

/// Expected commutation between edge Paulis L_i and L_j of a faithful
/// n-cycle: for n = 4 they commute exactly at index distance 2; for n >= 5
/// exactly when the cyclic distance (j - i) mod n lies in [3, n-3].
inline bool edge_pair_commutes_expected(int n, int i, int j) {
  if (n == 4) return ((j - i) % 4 + 4) % 4 == 2;
  int d = ((j - i) % n + n) % n;
  return d >= 3 && d <= n - 3;
}

struct EdgeConstraintReport {
  bool ok = false;
  std::vector<std::string> violations;
};

/// Validates the structural constraints every faithful cycle realization
/// must satisfy: nearest/next-nearest edge Paulis anticommute, distant ones
/// commute, each edge Pauli commutes with all cycle Paulis except the two
/// outer neighbours of its endpoints, and no edge Pauli equals (up to sign)
/// any cycle Pauli or the identity.
inline EdgeConstraintReport check_edge_constraints(const Realization& r) {
  int n = r.graph.num_vertices();
  if (n < 4 || !r.graph.is_canonical_cycle()) {
    throw std::invalid_argument("check_edge_constraints: needs a cycle of size >= 4");
  }
  auto ls = edge_paulis(r);
  EdgeConstraintReport report;
  auto note = [&](const std::string& msg) { report.violations.push_back(msg); };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool expect = edge_pair_commutes_expected(n, i, j);
      if (commutes(ls[i], ls[j]) != expect) {
        int d = std::min(j - i, n - (j - i));
        std::ostringstream os;
        os << "edge pair (L" << i << ", L" << j << ") violates condition "
           << (d == 1 ? 1 : d == 2 ? 2 : 3);
        note(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      bool expect = l != (i + n - 1) % n && l != (i + 2) % n;
      if (commutes(ls[i], r.ops[l]) != expect) {
        std::ostringstream os;
        os << "edge/cycle pair (L" << i << ", P" << l << ") violates condition 4";
        note(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (ls[i].is_identity_letters()) {
      note("edge Pauli L" + std::to_string(i) + " is the identity");
    }
    for (int l = 0; l < n; ++l) {
      if (ls[i].same_letters(r.ops[l])) {
        std::ostringstream os;
        os << "edge Pauli L" << i << " equals cycle Pauli P" << l << " up to sign";
        note(os.str());
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

namespace detail {

inline PhasedPauli row_from_letters(uint32_t m, const std::string& letters) {
  if (letters.size() != m) throw std::logic_error("row_from_letters: bad width");
  return PhasedPauli::parse(letters);
}

}  // namespace detail

/// The staircase realization of C_m on m qubits (m >= 3): an X marching
/// rightward with a growing Z prefix, the final row breaking the pattern
/// with a leading I.  Strictly dominated by construct_cycle_plus2; kept as a
/// baseline and regression anchor.
inline Realization construct_cycle_baseline(uint32_t m) {
  if (m < 3) throw std::invalid_argument("construct_cycle_baseline: m >= 3 required");
  std::vector<PhasedPauli> ops;
  for (uint32_t v = 0; v < m; ++v) {
    std::string row(m, 'I');
    if (v == 0) {
      row[0] = 'X';
    } else if (v <= m - 2) {
      for (uint32_t q = 0; q + 1 < v; ++q) row[q] = 'Z';
      row[v] = 'X';
    } else {
      for (uint32_t q = 1; q + 2 < m; ++q) row[q] = 'Z';
      row[m - 1] = 'X';
    }
    ops.push_back(detail::row_from_letters(m, row));
  }
  return Realization(Graph::cycle(m), std::move(ops));
}

/// Faithful realization of C_{m+2} on m qubits: the staircase continued
/// through Z...ZIX, Z...ZI and closed with IZ...Z.  For m = 1 the cycle is a
/// triangle and the three vertices all carry X (C_3 is complete, so any
/// pairwise-commuting triple realizes it).
inline Realization construct_cycle_plus2(uint32_t m) {
  if (m < 1) throw std::invalid_argument("construct_cycle_plus2: m >= 1 required");
  std::vector<PhasedPauli> ops;
  if (m == 1) {
    PhasedPauli x = PhasedPauli::parse("X");
    ops = {x, x, x};
    return Realization(Graph::cycle(3), std::move(ops));
  }
  for (uint32_t v = 0; v < m + 2; ++v) {
    std::string row(m, 'I');
    if (v == 0) {
      row[0] = 'X';
    } else if (v <= m - 1) {
      for (uint32_t q = 0; q + 1 < v; ++q) row[q] = 'Z';
      row[v] = 'X';
    } else if (v == m) {
      for (uint32_t q = 0; q + 1 < m; ++q) row[q] = 'Z';
    } else {
      for (uint32_t q = 1; q < m; ++q) row[q] = 'Z';
    }
    ops.push_back(detail::row_from_letters(m, row));
  }
  return Realization(Graph::cycle(m + 2), std::move(ops));
}

/// Tensors a single-qubit identity onto every operator.  Preserves
/// faithfulness and grows the qubit count by one.
inline Realization append_qubit(const Realization& r) {
  PhasedPauli one = PhasedPauli::identity(1);
  std::vector<PhasedPauli> ops;
  ops.reserve(r.ops.size());
  for (const auto& p : r.ops) ops.push_back(embed(p, one));
  return Realization(r.graph, std::move(ops));
}

/// Converts a faithful path realization of H_l into a faithful cycle
/// realization of C_l on one more qubit: the first operator gains X on the
/// fresh qubit, the last gains Y, all others gain I.  The endpoint operators
/// anticommute by faithfulness, and the appended anticommuting pair flips
/// them to commuting without disturbing anything else.
inline Realization path_to_cycle(const Realization& r) {
  int l = r.graph.num_vertices();
  if (l < 3 || !r.graph.is_canonical_path()) {
    throw std::invalid_argument("path_to_cycle: needs a path realization with l >= 3");
  }
  PhasedPauli x = PhasedPauli::parse("X");
  PhasedPauli y = PhasedPauli::parse("Y");
  PhasedPauli one = PhasedPauli::identity(1);
  std::vector<PhasedPauli> ops;
  ops.reserve(l);
  for (int v = 0; v < l; ++v) {
    const PhasedPauli& extra = v == 0 ? x : v == l - 1 ? y : one;
    ops.push_back(embed(r.ops[v], extra));
  }
  return Realization(Graph::cycle(l), std::move(ops));
}

/// Concatenates faithful path realizations of H_l (m qubits) and H_l'
/// (m' qubits) into a faithful realization of H_{l+l'-2} on m+m' qubits:
/// the first l-2 nodes keep P_i padded with identities, nodes l-1 and l
/// carry P_{l-1} (x) Q_1 and P_l (x) Q_2, and the remaining l'-2 nodes fix
/// P_l in the first block while walking Q_3..Q_l' in the second.
inline Realization concat_paths(const Realization& r1, const Realization& r2) {
  if (!r1.graph.is_canonical_path() || !r2.graph.is_canonical_path()) {
    throw std::invalid_argument("concat_paths: needs path realizations");
  }
  int l = r1.graph.num_vertices();
  int lp = r2.graph.num_vertices();
  PhasedPauli pad1 = PhasedPauli::identity(r2.num_qubits);
  std::vector<PhasedPauli> ops;
  ops.reserve(l + lp - 2);
  for (int v = 0; v + 2 < l; ++v) ops.push_back(embed(r1.ops[v], pad1));
  ops.push_back(embed(r1.ops[l - 2], r2.ops[0]));
  ops.push_back(embed(r1.ops[l - 1], r2.ops[1]));
  for (int j = 2; j < lp; ++j) ops.push_back(embed(r1.ops[l - 1], r2.ops[j]));
  return Realization(Graph::path(l + lp - 2), std::move(ops));
}

/// The single-qubit three-node path X - I - Y.
inline Realization h3_path_seed() {
  return Realization::from_strings(Graph::path(3), {"X", "I", "Y"});
}

/// A frozen faithful 2-qubit realization of the five-node path.
inline Realization h5_path_seed() {
  return Realization::from_strings(Graph::path(5), {"XI", "IX", "ZI", "ZZ", "YY"});
}

/// A frozen faithful 3-qubit realization of the eight-node path, originally
/// discovered with find_realization; the search suite re-derives and
/// re-validates it.
inline Realization h8_path_seed() {
  return Realization::from_strings(
      Graph::path(8),
      {"XII", "IXI", "ZII", "ZZI", "YYX", "YZZ", "YZI", "YZX"});
}

/// Faithful realization of C_{2m} (m = 1 mod 3) or C_{2m-1} (otherwise) on
/// m qubits, m >= 4: p-fold path concatenation of the 3-qubit H_8 seed,
/// extended by an H_3 or H_5 concat when the residue requires it, then
/// closed into a cycle with one extra qubit.
inline Realization construct_big_cycle(uint32_t m) {
  if (m < 4) throw std::invalid_argument("construct_big_cycle: m >= 4 required");
  uint32_t residue = m % 3;
  uint32_t p = (m - (residue == 1 ? 4 : residue == 2 ? 5 : 6)) / 3;
  Realization path = h8_path_seed();
  for (uint32_t round = 0; round < p; ++round) {
    path = concat_paths(path, h8_path_seed());
  }
  if (residue == 2) {
    path = concat_paths(path, h3_path_seed());
  } else if (residue == 0) {
    path = concat_paths(path, h5_path_seed());
  }
  return path_to_cycle(path);
}

/// The pairwise-commuting, GF(2)-independent witness set
/// S = {P_0} u {L_0, L_3, ..., L_{3(ceil(n/3)-2)}} of a faithful cycle
/// realization.  |S| = ceil(n/3), which bounds the cycle size by 3m.
/// Throws if the commutation or independence assertions fail (which would
/// signal an upstream faithfulness bug).
inline std::vector<PhasedPauli> independence_witness(const Realization& r) {
  int n = r.graph.num_vertices();
  if (n < 4 || !r.graph.is_canonical_cycle()) {
    throw std::invalid_argument("independence_witness: needs a cycle of size >= 4");
  }
  auto ls = edge_paulis(r);
  std::vector<PhasedPauli> s;
  s.push_back(r.ops[0]);
  int count = (n + 2) / 3 - 1;  // ceil(n/3) - 1 edge Paulis
  for (int j = 0; j < count; ++j) s.push_back(ls[3 * j]);
  for (size_t a = 0; a < s.size(); ++a) {
    for (size_t b = a + 1; b < s.size(); ++b) {
      if (!commutes(s[a], s[b])) {
        throw std::logic_error("independence_witness: set is not pairwise commuting");
      }
    }
  }
  if (!independent(s)) {
    throw std::logic_error("independence_witness: set is not independent");
  }
  return s;
}

}  // namespace paulicycles

#endif  // PAULICYCLES_REALIZATION_HPP
