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

#ifndef PAULICYCLES_SPECTRAL_HPP
#define PAULICYCLES_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "paulicycles/empirical.hpp"
#include "paulicycles/pauli.hpp"
#include "paulicycles/realization.hpp"

namespace paulicycles {

using Complex = std::complex<double>;

/// A real-weighted sum of phased Paulis on a common qubit count.
/// Hermitian exactly when every term's phase is +-1 (coefficients are real).
struct PauliSum {
  uint32_t m = 1;
  std::vector<std::pair<double, PhasedPauli>> terms;

  explicit PauliSum(uint32_t num_qubits) : m(num_qubits) {}

  void add(double coefficient, const PhasedPauli& p) {
    if (p.num_qubits() != m) {
      throw std::invalid_argument("PauliSum: qubit-count mismatch");
    }
    terms.emplace_back(coefficient, p);
  }

  bool is_hermitian() const {
    for (const auto& [c, p] : terms) {
      if (!p.is_hermitian()) return false;
    }
    return true;
  }

  /// Folds real phases into coefficients, merges terms with equal letter
  /// patterns, and drops terms with negligible coefficients.  Requires a
  /// Hermitian sum.
  PauliSum normalized(double drop_tol = 1e-14) const {
    std::map<std::pair<uint64_t, uint64_t>, double> acc;
    for (const auto& [c, p] : terms) {
      if (!p.is_hermitian()) {
        throw std::invalid_argument("PauliSum::normalized: non-Hermitian term");
      }
      double sign = p.phase_exponent() == 2 ? -1.0 : 1.0;
      acc[{p.x_bits(), p.z_bits()}] += sign * c;
    }
    PauliSum out(m);
    for (const auto& [xz, c] : acc) {
      if (std::abs(c) > drop_tol) {
        out.add(c, PhasedPauli(m, xz.first, xz.second, 0));
      }
    }
    return out;
  }
};

namespace detail {

// Qubit j (leftmost letter) is the most significant basis-index bit.
inline uint64_t qubit_to_basis_mask(uint64_t qubit_mask, uint32_t m) {
  uint64_t out = 0;
  while (qubit_mask) {
    int j = std::countr_zero(qubit_mask);
    qubit_mask &= qubit_mask - 1;
    out |= uint64_t{1} << (m - 1 - j);
  }
  return out;
}

struct PauliAction {
  uint64_t flip;    // basis-index bits toggled by the X part
  uint64_t sign;    // basis-index bits picking up (-1) from the Z part
  Complex scale;    // i^(phase exponent + #Y letters)

  explicit PauliAction(const PhasedPauli& p) {
    uint32_t m = p.num_qubits();
    flip = qubit_to_basis_mask(p.x_bits(), m);
    sign = qubit_to_basis_mask(p.z_bits(), m);
    static constexpr Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    scale = ipow[(p.phase_exponent() + std::popcount(p.x_bits() & p.z_bits())) & 3];
  }

  Complex factor(uint64_t basis_index) const {
    return (std::popcount(basis_index & sign) & 1) ? -scale : scale;
  }
};

}  // namespace detail

/// out = P |in>, both of size 2^m (out is overwritten).
inline void apply_pauli(const PhasedPauli& p, const std::vector<Complex>& in,
                        std::vector<Complex>& out) {
  detail::PauliAction act(p);
  size_t dim = in.size();
  out.assign(dim, Complex{0, 0});
  for (size_t b = 0; b < dim; ++b) {
    out[b ^ act.flip] = act.factor(b) * in[b];
  }
}

/// A pure state on m qubits in the computational basis, qubit 1 most
/// significant.
struct StateVector {
  std::vector<Complex> amps;

  size_t dim() const { return amps.size(); }

  double norm() const {
    double s = 0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
  }

  void require_normalized(double tol = 1e-10) const {
    if (std::abs(norm() - 1.0) > tol) {
      throw std::invalid_argument("StateVector: not unit norm");
    }
  }
};

/// Dense 2^m x 2^m Hermitian matrix.
struct DenseHermitian {
  uint32_t m = 0;
  Eigen::MatrixXcd mat;

  DenseHermitian(uint32_t num_qubits, Eigen::MatrixXcd entries)
      : m(num_qubits), mat(std::move(entries)) {
    Eigen::Index dim = Eigen::Index{1} << m;
    if (mat.rows() != dim || mat.cols() != dim) {
      throw std::invalid_argument("DenseHermitian: dimension is not 2^m");
    }
    double dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
      throw std::invalid_argument("DenseHermitian: matrix is not Hermitian");
    }
  }
};

/// Kronecker expansion of a Hermitian Pauli sum into a dense matrix.
/// Capped at m <= 12 (dim 4096); every computation in this library needs
/// only m <= 7.
inline DenseHermitian to_matrix(const PauliSum& s) {
  if (s.m > 12) throw std::invalid_argument("to_matrix: m > 12 unsupported");
  if (!s.is_hermitian()) {
    throw std::invalid_argument("to_matrix: sum is not Hermitian");
  }
  size_t dim = size_t{1} << s.m;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [c, p] : s.terms) {
    detail::PauliAction act(p);
    for (size_t b = 0; b < dim; ++b) {
      mat((Eigen::Index)(b ^ act.flip), (Eigen::Index)b) += c * act.factor(b);
    }
  }
  return DenseHermitian(s.m, std::move(mat));
}

inline DenseHermitian to_matrix(const PhasedPauli& p) {
  PauliSum s(p.num_qubits());
  s.add(1.0, p);
  return to_matrix(s);
}

/// Full Hermitian eigendecomposition, eigenvalues ascending.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;  // column k pairs with values[k]
};

inline EigenSystem eigen_decompose(const DenseHermitian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.mat);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_decompose: solver did not converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

struct ExtremeEigen {
  double lambda_max = 0;
  StateVector v_max;
  double lambda_min = 0;
};

/// Largest/smallest eigenvalues with the top eigenvector, with the residual
/// |H v - lambda v| checked against tol * |H|.
inline ExtremeEigen extreme_eigen(const DenseHermitian& h, double tol = 1e-9) {
  EigenSystem sys = eigen_decompose(h);
  Eigen::Index last = sys.values.size() - 1;
  double scale = std::max(1.0, h.mat.norm());
  Eigen::VectorXcd top = sys.vectors.col(last);
  double residual = (h.mat * top - sys.values[last] * top).norm();
  if (residual > tol * scale) {
    throw std::runtime_error("extreme_eigen: residual check failed");
  }
  ExtremeEigen out;
  out.lambda_max = sys.values[last];
  out.lambda_min = sys.values[0];
  out.v_max.amps.assign(top.data(), top.data() + top.size());
  return out;
}

/// <psi| S |psi> for a Hermitian Pauli sum, computed without forming the
/// matrix.  The imaginary part must vanish to 1e-10.
inline double expectation(const StateVector& state, const PauliSum& s) {
  if (state.dim() != size_t{1} << s.m) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  Complex total{0, 0};
  for (const auto& [c, p] : s.terms) {
    detail::PauliAction act(p);
    Complex term{0, 0};
    for (size_t b = 0; b < state.dim(); ++b) {
      term += std::conj(state.amps[b ^ act.flip]) * act.factor(b) * state.amps[b];
    }
    total += c * term;
  }
  if (s.is_hermitian() && std::abs(total.imag()) > 1e-10) {
    throw std::runtime_error("expectation: imaginary part too large");
  }
  return total.real();
}

inline double expectation(const StateVector& state, const PhasedPauli& p) {
  PauliSum s(p.num_qubits());
  s.add(1.0, p);
  return expectation(state, s);
}

/// Joint outcome distributions per context from spectral projector products
/// Pi_(+-)(P) = (I +- P)/2.  Requires the assigned operators to commute
/// within every context (guaranteed by a faithful realization).  Negative
/// float noise down to -1e-9 is clamped to zero; anything below that is a
/// logic error.
inline EmpiricalModel quantum_behavior(const Realization& r, const StateVector& state,
                                       const Scenario& sc) {
  if (!(r.graph == sc.graph)) {
    throw std::invalid_argument("quantum_behavior: realization/scenario graph mismatch");
  }
  if (state.dim() != size_t{1} << r.num_qubits) {
    throw std::invalid_argument("quantum_behavior: state dimension mismatch");
  }
  state.require_normalized();
  EmpiricalModel model;
  model.scenario = sc;
  for (const auto& context : sc.contexts) {
    for (size_t a = 0; a < context.size(); ++a) {
      for (size_t b = a + 1; b < context.size(); ++b) {
        if (!commutes(r.ops[context[a]], r.ops[context[b]])) {
          throw std::invalid_argument("quantum_behavior: non-commuting context");
        }
      }
    }
    std::vector<double> table(size_t{1} << context.size(), 0.0);
    std::vector<Complex> buf(state.dim());
    std::vector<Complex> projected(state.dim());
    for (size_t o = 0; o < table.size(); ++o) {
      projected = state.amps;
      for (size_t t = 0; t < context.size(); ++t) {
        double sign = ((o >> t) & 1u) ? -1.0 : 1.0;
        apply_pauli(r.ops[context[t]], projected, buf);
        for (size_t b = 0; b < projected.size(); ++b) {
          projected[b] = 0.5 * (projected[b] + sign * buf[b]);
        }
      }
      double p = 0;
      for (const auto& a : projected) p += std::norm(a);
      if (p < -1e-9) {
        throw std::runtime_error("quantum_behavior: probability below -1e-9");
      }
      table[o] = p < 0 ? 0.0 : p;
    }
    double sum = 0;
    for (double p : table) sum += p;
    if (std::abs(sum - 1.0) > 1e-10) {
      throw std::runtime_error("quantum_behavior: context distribution does not sum to 1");
    }
    model.tables.push_back(std::move(table));
  }
  return model;
}

}  // namespace paulicycles

#endif  // PAULICYCLES_SPECTRAL_HPP
