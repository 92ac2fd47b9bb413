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

#ifndef PAULICYCLES_PAULI_HPP
#define PAULICYCLES_PAULI_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paulicycles {

/// An m-qubit Pauli group element stored as i^k * (tensor of letters).
///
/// Letters are encoded per qubit by a pair of bits: (x,z) = (0,0) -> I,
/// (1,0) -> X, (0,1) -> Z, (1,1) -> Y, where the letters are the usual
/// Hermitian 2x2 matrices.  Qubit 1 is the leftmost letter of the string
/// form and bit 0 of the x/z words.  The phase exponent k in {0,1,2,3}
/// is a global scalar i^k multiplying the letter tensor, so the element
/// is Hermitian exactly when k is even.
///
/// Supports m up to 64 qubits.  Values are immutable after construction
/// and all operations are pure, so they are safe to share across threads.
class PhasedPauli {
 public:
  PhasedPauli(uint32_t num_qubits, uint64_t x_bits, uint64_t z_bits,
              uint32_t phase_exponent = 0)
      : m_(num_qubits), x_(x_bits), z_(z_bits), k_(phase_exponent & 3u) {
    if (m_ == 0 || m_ > 64) {
      throw std::invalid_argument("PhasedPauli: qubit count must be in [1, 64]");
    }
    uint64_t mask = width_mask(m_);
    if ((x_ & ~mask) != 0 || (z_ & ~mask) != 0) {
      throw std::invalid_argument("PhasedPauli: x/z bits exceed qubit count");
    }
  }

  static PhasedPauli identity(uint32_t num_qubits) {
    return PhasedPauli(num_qubits, 0, 0, 0);
  }

  /// Parses an optional sign prefix ("+", "-", "i", "+i", "-i") followed by
  /// one letter from {I,X,Y,Z} per qubit, leftmost letter = qubit 1.
  static PhasedPauli parse(std::string_view text) {
    size_t pos = 0;
    uint32_t k = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') k += 2;
      ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
      k += 1;
      ++pos;
    }
    if (pos == text.size()) {
      throw std::invalid_argument("PhasedPauli::parse: no letters in \"" +
                                  std::string(text) + "\"");
    }
    if (text.size() - pos > 64) {
      throw std::invalid_argument("PhasedPauli::parse: more than 64 qubits");
    }
    uint64_t x = 0, z = 0;
    uint32_t m = 0;
    for (; pos < text.size(); ++pos, ++m) {
      switch (text[pos]) {
        case 'I':
          break;
        case 'X':
          x |= uint64_t{1} << m;
          break;
        case 'Z':
          z |= uint64_t{1} << m;
          break;
        case 'Y':
          x |= uint64_t{1} << m;
          z |= uint64_t{1} << m;
          break;
        default:
          throw std::invalid_argument(
              std::string("PhasedPauli::parse: illegal character '") +
              text[pos] + "'");
      }
    }
    return PhasedPauli(m, x, z, k);
  }

  uint32_t num_qubits() const { return m_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  uint32_t phase_exponent() const { return k_; }

  std::complex<double> phase() const {
    static constexpr std::complex<double> table[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k_];
  }

  bool is_hermitian() const { return (k_ & 1u) == 0; }

  /// True when every letter is I (the phase may still be any i^k).
  bool is_identity_letters() const { return x_ == 0 && z_ == 0; }

  /// Letter at 0-based qubit index (0 = leftmost in the string form).
  char letter(uint32_t qubit) const {
    bool xb = (x_ >> qubit) & 1u;
    bool zb = (z_ >> qubit) & 1u;
    return "IXZY"[xb + 2 * zb];
  }

  /// Canonical string form: "" / "+i" / "-" / "-i" prefix, then letters.
  std::string str() const {
    static constexpr const char* prefix[4] = {"", "+i", "-", "-i"};
    std::string out = prefix[k_];
    for (uint32_t q = 0; q < m_; ++q) out.push_back(letter(q));
    return out;
  }

  /// Same letter tensor, ignoring the phase.
  bool same_letters(const PhasedPauli& other) const {
    return m_ == other.m_ && x_ == other.x_ && z_ == other.z_;
  }

  PhasedPauli operator-() const { return PhasedPauli(m_, x_, z_, k_ + 2); }

  friend bool operator==(const PhasedPauli& a, const PhasedPauli& b) {
    return a.m_ == b.m_ && a.x_ == b.x_ && a.z_ == b.z_ && a.k_ == b.k_;
  }

  /// Exact group product with the phase accumulated from per-qubit letter
  /// products (X*Y = iZ and cyclic, A*A = I).
  friend PhasedPauli operator*(const PhasedPauli& a, const PhasedPauli& b) {
    if (a.m_ != b.m_) {
      throw std::invalid_argument("PhasedPauli multiply: qubit-count mismatch");
    }
    uint32_t k = a.k_ + b.k_;
    uint64_t rest_a_x = a.x_, rest_a_z = a.z_;
    uint64_t rest_b_x = b.x_, rest_b_z = b.z_;
    uint64_t overlap = (rest_a_x | rest_a_z) & (rest_b_x | rest_b_z);
    while (overlap != 0) {
      uint32_t q = std::countr_zero(overlap);
      overlap &= overlap - 1;
      uint32_t la = ((rest_a_x >> q) & 1u) + 2 * ((rest_a_z >> q) & 1u);
      uint32_t lb = ((rest_b_x >> q) & 1u) + 2 * ((rest_b_z >> q) & 1u);
      k += kLetterPhase[la][lb];
    }
    return PhasedPauli(a.m_, a.x_ ^ b.x_, a.z_ ^ b.z_, k);
  }

 private:
  static uint64_t width_mask(uint32_t m) {
    return m >= 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
  }

  // kLetterPhase[a][b] = exponent t with letter_a * letter_b = i^t letter_{a^b},
  // indices a = x + 2z (I=0, X=1, Z=2, Y=3).  Single source of truth for phases.
  static constexpr uint32_t kLetterPhase[4][4] = {
      {0, 0, 0, 0},  // I*.
      {0, 0, 3, 1},  // X*: X*Z = -iY, X*Y = iZ
      {0, 1, 0, 3},  // Z*: Z*X = iY,  Z*Y = -iX
      {0, 3, 1, 0},  // Y*: Y*X = -iZ, Y*Z = iX
  };

  uint32_t m_;
  uint64_t x_;
  uint64_t z_;
  uint32_t k_;
};

/// True iff p and q commute; the symplectic form over GF(2), phases never
/// affect the result.
inline bool commutes(const PhasedPauli& p, const PhasedPauli& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("commutes: qubit-count mismatch");
  }
  int s = std::popcount(p.x_bits() & q.z_bits()) +
          std::popcount(p.z_bits() & q.x_bits());
  return (s & 1) == 0;
}

/// Phaseless carrier of the x||z bit pattern for GF(2) linear algebra.
struct SymplecticVector {
  uint32_t m;
  uint64_t x;
  uint64_t z;
};

inline SymplecticVector symplectic(const PhasedPauli& p) {
  return SymplecticVector{p.num_qubits(), p.x_bits(), p.z_bits()};
}

inline size_t gf2_rank(std::vector<SymplecticVector> rows) {
  size_t rank = 0;
  for (int bit = 127; bit >= 0 && rank < rows.size(); --bit) {
    uint64_t xm = bit >= 64 ? uint64_t{1} << (bit - 64) : 0;
    uint64_t zm = bit >= 64 ? 0 : uint64_t{1} << bit;
    size_t pivot = rank;
    while (pivot < rows.size() && ((rows[pivot].x & xm) | (rows[pivot].z & zm)) == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (((rows[r].x & xm) | (rows[r].z & zm)) != 0) {
        rows[r].x ^= rows[rank].x;
        rows[r].z ^= rows[rank].z;
      }
    }
    ++rank;
  }
  return rank;
}

/// True iff the symplectic vectors of the set are linearly independent over
/// GF(2).  The all-zero vector (an identity-letter element, any phase) makes
/// the set dependent.  The empty set is independent by convention.
inline bool independent(std::span<const PhasedPauli> paulis) {
  if (paulis.empty()) return true;
  std::vector<SymplecticVector> rows;
  rows.reserve(paulis.size());
  uint32_t m = paulis.front().num_qubits();
  for (const auto& p : paulis) {
    if (p.num_qubits() != m) {
      throw std::invalid_argument("independent: qubit-count mismatch");
    }
    rows.push_back(symplectic(p));
  }
  return gf2_rank(std::move(rows)) == paulis.size();
}

inline bool independent(const std::vector<PhasedPauli>& paulis) {
  return independent(std::span<const PhasedPauli>(paulis));
}

/// Tensor concatenation p (x) extra, phases multiplied; the result has
/// p.num_qubits() + extra.num_qubits() qubits.
inline PhasedPauli embed(const PhasedPauli& p, const PhasedPauli& extra) {
  uint32_t m = p.num_qubits(), me = extra.num_qubits();
  if (m + me > 64) {
    throw std::invalid_argument("embed: result exceeds 64 qubits");
  }
  return PhasedPauli(m + me, p.x_bits() | (extra.x_bits() << m),
                     p.z_bits() | (extra.z_bits() << m),
                     p.phase_exponent() + extra.phase_exponent());
}

}  // namespace paulicycles

#endif  // PAULICYCLES_PAULI_HPP
