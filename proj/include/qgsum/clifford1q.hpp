// Copyright 2026 The qgsum Authors
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

#ifndef QGSUM_CLIFFORD1Q_HPP
#define QGSUM_CLIFFORD1Q_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgsum/coeff.hpp"

namespace qgsum {

// Exact 2x2 matrix over the coefficient ring.
struct Mat2 {
  CycCoeff m00, m01, m10, m11;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  Mat2 adjoint() const {
    return {m00.conjugate(), m10.conjugate(), m01.conjugate(),
            m11.conjugate()};
  }
  Mat2 times_omega_pow(int k) const {
    return {m00.times_omega_pow(k), m01.times_omega_pow(k),
            m10.times_omega_pow(k), m11.times_omega_pow(k)};
  }
  bool is_diagonal() const { return m01.is_zero() && m10.is_zero(); }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct SignedPauli {
  Pauli p;
  bool negative;
};

// Single-qubit Pauli product: x * y = i^phase_exp * p.
struct PauliMul {
  Pauli p;
  std::uint8_t phase_exp;  // power of i, mod 4
};
PauliMul pauli_mul(Pauli x, Pauli y);

// One of the 24 local Clifford classes together with a power of w relating
// it to some concrete matrix: the pair denotes w^phase * rep(cls).
struct PhasedClass {
  std::uint8_t cls = 0;
  std::uint8_t phase = 0;  // power of w = exp(i*pi/4), mod 8
};

// The 24-class single-qubit Clifford group <H,S> mod global phase, with
// exact phase tracking.  All tables are generated at first use by closing
// {H, S} under exact matrix multiplication and are self-checked; nothing is
// hand-transcribed.  Class 0 is the identity and each class's canonical
// representative is the first matrix reaching it in breadth-first generation
// with letter order H < S, which also fixes the serialized generator words.
class CliffordTables {
 public:
  static constexpr int kNumClasses = 24;

  // Built once, then read-only; safe for concurrent readers.
  static const CliffordTables& get();

  const Mat2& rep(int cls) const { return reps_[cls]; }
  const std::string& word(int cls) const { return words_[cls]; }

  // rep(x) * rep(y) = w^phase * rep(cls).
  PhasedClass mul(int x, int y) const { return mul_[x][y]; }
  // rep(x)^-1 = w^phase * rep(cls).
  PhasedClass inv(int x) const { return inv_[x]; }
  // rep(cls) * P * rep(cls)^-1 = sign * P' for P in {X, Y, Z}.
  SignedPauli conjugate_pauli(int cls, Pauli p) const {
    return conj_[cls][static_cast<int>(p) - 1];
  }

  bool is_diagonal(int cls) const { return diagonal_[cls]; }

  // rep(cls) = w^pauli_phase * sigma(pauli_letter) when the class is one of
  // the four Pauli classes (letter I/X/Y/Z); letter I with is_pauli false
  // otherwise.
  bool is_pauli(int cls) const { return pauli_letter_[cls].has_value(); }
  Pauli pauli_letter(int cls) const { return pauli_letter_[cls].value(); }
  std::uint8_t pauli_phase(int cls) const { return pauli_phase_[cls]; }

  // Matches m against w^k * rep(cls) over all classes and k.
  std::optional<PhasedClass> resolve(const Mat2& m) const;

  // Phased composition: value(x) * value(y) where value(p) = w^phase rep(cls).
  PhasedClass compose(PhasedClass x, PhasedClass y) const {
    PhasedClass r = mul(x.cls, y.cls);
    r.phase = static_cast<std::uint8_t>((r.phase + x.phase + y.phase) & 7);
    return r;
  }

  // Named gates resolved from their exact matrices.
  PhasedClass identity() const { return id_; }
  PhasedClass x() const { return x_; }
  PhasedClass y() const { return y_; }
  PhasedClass z() const { return z_; }
  PhasedClass h() const { return h_; }
  PhasedClass s() const { return s_; }
  PhasedClass sdg() const { return sdg_; }
  // S^k for k mod 4 (I, S, Z, S†).
  PhasedClass s_pow(int k) const { return s_pow_[((k % 4) + 4) % 4]; }
  // H*Z, the pivot prefix of the merge formula.
  PhasedClass hz() const { return hz_; }
  // exp(+i pi/4 X): composed onto the pivot vertex by a local
  // complementation of the term representation.
  PhasedClass lc_pivot() const { return lc_pivot_; }
  // exp(-i pi/4 Z): composed onto each neighbor by the same move.
  PhasedClass lc_neighbor() const { return lc_neighbor_; }

  // Shortest move word turning a class diagonal via right-multiplication,
  // 'x' = multiply by the lc_pivot class (local complementation here),
  // 'z' = multiply by the lc_neighbor class (local complementation at a
  // neighbor).  Empty for diagonal classes.
  const std::string& reduction_word(int cls) const { return reduce_[cls]; }

  static Mat2 pauli_matrix(Pauli p);

 private:
  CliffordTables();

  std::vector<Mat2> reps_;
  std::vector<std::string> words_;
  PhasedClass mul_[kNumClasses][kNumClasses];
  PhasedClass inv_[kNumClasses];
  SignedPauli conj_[kNumClasses][3];
  bool diagonal_[kNumClasses];
  std::array<std::optional<Pauli>, kNumClasses> pauli_letter_;
  std::uint8_t pauli_phase_[kNumClasses];
  std::string reduce_[kNumClasses];

  PhasedClass id_, x_, y_, z_, h_, s_, sdg_, hz_, lc_pivot_, lc_neighbor_;
  PhasedClass s_pow_[4];
};

}  // namespace qgsum

#endif  // QGSUM_CLIFFORD1Q_HPP
