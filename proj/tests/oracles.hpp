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

// Test-only oracles, deliberately independent of the library's
// implementations: a naive dense complex matrix type with Kronecker
// products, brute-force GF(2) dependence, brute-force induced-cycle
// enumeration, and a characteristic-polynomial root finder.

#ifndef PAULICYCLES_TESTS_ORACLES_HPP
#define PAULICYCLES_TESTS_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "paulicycles/graph.hpp"
#include "paulicycles/pauli.hpp"

namespace oracle {

using Complex = std::complex<double>;

struct Mat {
  size_t dim = 0;
  std::vector<Complex> a;  // row-major

  static Mat zero(size_t d) { return Mat{d, std::vector<Complex>(d * d, Complex{0, 0})}; }
  static Mat eye(size_t d) {
    Mat m = zero(d);
    for (size_t i = 0; i < d; ++i) m.a[i * d + i] = 1;
    return m;
  }
  Complex& at(size_t r, size_t c) { return a[r * dim + c]; }
  Complex at(size_t r, size_t c) const { return a[r * dim + c]; }
};

inline Mat mul(const Mat& x, const Mat& y) {
  Mat out = Mat::zero(x.dim);
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t k = 0; k < x.dim; ++k) {
      Complex v = x.at(i, k);
      if (v == Complex{0, 0}) continue;
      for (size_t j = 0; j < x.dim; ++j) out.at(i, j) += v * y.at(k, j);
    }
  }
  return out;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat out = Mat::zero(x.dim * y.dim);
  for (size_t i = 0; i < x.dim; ++i)
    for (size_t j = 0; j < x.dim; ++j)
      for (size_t k = 0; k < y.dim; ++k)
        for (size_t l = 0; l < y.dim; ++l)
          out.at(i * y.dim + k, j * y.dim + l) = x.at(i, j) * y.at(k, l);
  return out;
}

inline Mat scale(Complex s, Mat m) {
  for (auto& v : m.a) v *= s;
  return m;
}

inline Mat add(const Mat& x, const Mat& y) {
  Mat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
  double d = 0;
  for (size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

inline Mat letter(char c) {
  Mat m = Mat::zero(2);
  switch (c) {
    case 'I': m.at(0, 0) = 1; m.at(1, 1) = 1; break;
    case 'X': m.at(0, 1) = 1; m.at(1, 0) = 1; break;
    case 'Y': m.at(0, 1) = {0, -1}; m.at(1, 0) = {0, 1}; break;
    case 'Z': m.at(0, 0) = 1; m.at(1, 1) = -1; break;
  }
  return m;
}

inline Mat pauli_matrix(const paulicycles::PhasedPauli& p) {
  Mat m = letter(p.letter(0));
  for (uint32_t q = 1; q < p.num_qubits(); ++q) m = kron(m, letter(p.letter(q)));
  return scale(p.phase(), std::move(m));
}

inline bool matrices_commute(const Mat& x, const Mat& y) {
  return max_abs_diff(mul(x, y), mul(y, x)) < 1e-12;
}

// Dependent iff some nonempty subset of the symplectic vectors XORs to zero.
inline bool brute_force_dependent(const std::vector<paulicycles::PhasedPauli>& set) {
  size_t n = set.size();
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    uint64_t x = 0, z = 0;
    for (size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        x ^= set[i].x_bits();
        z ^= set[i].z_bits();
      }
    }
    if (x == 0 && z == 0) return true;
  }
  return false;
}

// All induced cycles of length in [4, max_len] by subset enumeration: a
// vertex subset is one iff its induced subgraph is connected and 2-regular.
inline std::vector<std::vector<int>> brute_force_induced_cycles(const paulicycles::Graph& g,
                                                                int max_len) {
  std::vector<std::vector<int>> out;
  int n = g.num_vertices();
  for (uint64_t subset = 0; subset < (uint64_t{1} << n); ++subset) {
    int size = std::popcount(subset);
    if (size < 4 || size > max_len) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if ((subset >> v) & 1u) verts.push_back(v);
    }
    bool two_regular = true;
    for (int v : verts) {
      if (std::popcount(g.neighbors(v) & subset) != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular) continue;
    // connectivity within the subset
    uint64_t seen = uint64_t{1} << verts[0];
    std::vector<int> stack{verts[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      uint64_t nb = g.neighbors(v) & subset & ~seen;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        seen |= uint64_t{1} << w;
        stack.push_back(w);
      }
    }
    if (seen == subset) out.push_back(std::move(verts));
  }
  return out;
}

inline paulicycles::Graph random_graph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  paulicycles::Graph g(n);
  std::bernoulli_distribution edge(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

// Characteristic polynomial coefficients via Faddeev-LeVerrier, then roots
// via Durand-Kerner.  Good enough for the 2x2 and 4x4 cross-checks.
inline std::vector<double> char_poly_eigenvalues(const Mat& m) {
  size_t n = m.dim;
  std::vector<Complex> coeff(n + 1);  // p(x) = x^n + c[1] x^{n-1} + ... + c[n]
  coeff[0] = 1;
  Mat mk = Mat::zero(n);
  for (size_t k = 1; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c_{k-1} I)
    Mat tmp = mk;
    for (size_t i = 0; i < n; ++i) tmp.at(i, i) += coeff[k - 1];
    mk = mul(m, tmp);
    Complex trace{0, 0};
    for (size_t i = 0; i < n; ++i) trace += mk.at(i, i);
    coeff[k] = -trace / double(k);
  }
  // Durand-Kerner
  std::vector<Complex> roots(n);
  for (size_t i = 0; i < n; ++i) {
    roots[i] = std::pow(Complex{0.4, 0.9}, double(i + 1));
  }
  auto eval = [&](Complex x) {
    Complex v = coeff[0];
    for (size_t k = 1; k <= n; ++k) v = v * x + coeff[k];
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (size_t i = 0; i < n; ++i) {
      Complex denom{1, 0};
      for (size_t j = 0; j < n; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      Complex delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  std::vector<double> values;
  for (const auto& r : roots) values.push_back(r.real());
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace oracle

#endif  // PAULICYCLES_TESTS_ORACLES_HPP
