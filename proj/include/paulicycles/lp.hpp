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

#ifndef PAULICYCLES_LP_HPP
#define PAULICYCLES_LP_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace paulicycles {

/// Result of an equality-form feasibility problem  A w = b, w >= 0.
/// When infeasible, `dual` is a Farkas vector y with y.b > 0 while
/// y.A_j <= 0 for every column j.
struct LpResult {
  bool feasible = false;
  std::vector<double> solution;
  std::vector<double> dual;
  double infeasibility = 0.0;  // phase-I optimum
};

/// Phase-I simplex with Bland's rule over a dense tableau.  Sized for the
/// noncontextual-polytope instances here (tens of rows, up to a few tens of
/// thousands of columns); rows with negative right-hand sides are flipped.
inline LpResult solve_equality_feasibility(std::vector<std::vector<double>> a,
                                           std::vector<double> b,
                                           double pivot_tol = 1e-9,
                                           double feas_tol = 1e-9) {
  size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("lp: row count mismatch");
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<double> flip(rows, 1.0);
  for (size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("lp: ragged matrix");
    if (b[i] < 0) {
      flip[i] = -1.0;
      b[i] = -b[i];
      for (double& v : a[i]) v = -v;
    }
  }

  // Tableau layout: [structural | artificial | rhs]; initial basis is the
  // artificial identity block.
  size_t width = cols + rows + 1;
  std::vector<std::vector<double>> t(rows, std::vector<double>(width, 0.0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1.0;
    t[i][width - 1] = b[i];
  }
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // Reduced-cost row for minimizing the artificial sum; d[width-1] holds
  // minus the current objective.
  std::vector<double> d(width, 0.0);
  for (size_t j = 0; j < cols; ++j) {
    double s = 0;
    for (size_t i = 0; i < rows; ++i) s += t[i][j];
    d[j] = -s;
  }
  double obj = 0;
  for (size_t i = 0; i < rows; ++i) obj += b[i];
  d[width - 1] = -obj;

  size_t iter_cap = 2000 * (rows + 2);
  for (size_t iter = 0; iter < iter_cap; ++iter) {
    size_t enter = width;
    for (size_t j = 0; j < cols + rows; ++j) {  // Bland: smallest index
      if (d[j] < -pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;  // optimal
    size_t leave = rows;
    double best_ratio = 0;
    for (size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > pivot_tol) {
        double ratio = t[i][width - 1] / t[i][enter];
        if (leave == rows || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == rows) {
      throw std::logic_error("lp: phase-I unbounded (should be impossible)");
    }
    double pivot = t[leave][enter];
    for (double& v : t[leave]) v /= pivot;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      double f = t[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    double f = d[enter];
    if (f != 0) {
      for (size_t j = 0; j < width; ++j) d[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult out;
  out.infeasibility = -d[width - 1];
  if (out.infeasibility <= feas_tol) {
    out.feasible = true;
    out.solution.assign(cols, 0.0);
    for (size_t i = 0; i < rows; ++i) {
      if (basis[i] < cols) out.solution[basis[i]] = t[i][width - 1];
    }
  } else {
    // Dual from the artificial reduced costs: d[cols+i] = 1 - y_i on the
    // original (unflipped) rows.
    out.dual.assign(rows, 0.0);
    for (size_t i = 0; i < rows; ++i) {
      out.dual[i] = flip[i] * (1.0 - d[cols + i]);
    }
  }
  return out;
}

}  // namespace paulicycles

#endif  // PAULICYCLES_LP_HPP
