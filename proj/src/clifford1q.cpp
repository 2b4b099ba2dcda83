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

#include "qgsum/clifford1q.hpp"

#include <deque>
#include <stdexcept>

namespace qgsum {

namespace {

Mat2 matrix_h() {
  CycCoeff r = CycCoeff::inv_sqrt2();
  return {r, r, r, -r};
}

Mat2 matrix_s() {
  return {CycCoeff::one(), CycCoeff::zero(), CycCoeff::zero(),
          CycCoeff::imag_unit()};
}

Mat2 matrix_identity() {
  return {CycCoeff::one(), CycCoeff::zero(), CycCoeff::zero(),
          CycCoeff::one()};
}

// exp(+i pi/4 X) = (I + iX)/sqrt(2).
Mat2 matrix_exp_px() {
  CycCoeff r = CycCoeff::inv_sqrt2();
  CycCoeff ir = r.times_omega_pow(2);
  return {r, ir, ir, r};
}

// exp(-i pi/4 Z) = diag(w^-1, w).
Mat2 matrix_exp_mz() {
  return {CycCoeff::omega_pow(-1), CycCoeff::zero(), CycCoeff::zero(),
          CycCoeff::omega_pow(1)};
}

}  // namespace

Mat2 CliffordTables::pauli_matrix(Pauli p) {
  CycCoeff o = CycCoeff::one(), z = CycCoeff::zero(),
           i = CycCoeff::imag_unit();
  switch (p) {
    case Pauli::I:
      return {o, z, z, o};
    case Pauli::X:
      return {z, o, o, z};
    case Pauli::Y:
      return {z, -i, i, z};
    case Pauli::Z:
      return {o, z, z, -o};
  }
  throw std::logic_error("bad pauli");
}

PauliMul pauli_mul(Pauli x, Pauli y) {
  if (x == Pauli::I) return {y, 0};
  if (y == Pauli::I) return {x, 0};
  if (x == y) return {Pauli::I, 0};
  // XY = iZ and cyclic; reversed order flips the sign.
  int xi = static_cast<int>(x), yi = static_cast<int>(y);
  Pauli third = static_cast<Pauli>(6 - xi - yi);
  bool forward = (yi - xi + 3) % 3 == 1;  // X->Y->Z->X
  return {third, static_cast<std::uint8_t>(forward ? 1 : 3)};
}

std::optional<PhasedClass> CliffordTables::resolve(const Mat2& m) const {
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    Mat2 r = reps_[c];
    for (int k = 0; k < 8; ++k) {
      if (m == r) {
        return PhasedClass{static_cast<std::uint8_t>(c),
                           static_cast<std::uint8_t>(k)};
      }
      r = r.times_omega_pow(1);
    }
  }
  return std::nullopt;
}

CliffordTables::CliffordTables() {
  const Mat2 H = matrix_h();
  const Mat2 S = matrix_s();

  // Breadth-first closure of {H, S}; the first matrix reaching a class is
  // kept as its representative, so phases and serialized words are stable.
  reps_.push_back(matrix_identity());
  words_.push_back("");
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (char letter : {'H', 'S'}) {
      Mat2 cand = reps_[cur] * (letter == 'H' ? H : S);
      if (!resolve(cand)) {
        reps_.push_back(cand);
        words_.push_back(words_[cur] + letter);
        queue.push_back(static_cast<int>(reps_.size()) - 1);
      }
    }
  }
  if (reps_.size() != kNumClasses) {
    throw std::logic_error("local Clifford closure did not produce 24 classes");
  }

  for (int i = 0; i < kNumClasses; ++i) {
    for (int j = 0; j < kNumClasses; ++j) {
      auto r = resolve(reps_[i] * reps_[j]);
      if (!r) throw std::logic_error("class product left the group");
      mul_[i][j] = *r;
    }
    auto r = resolve(reps_[i].adjoint());
    if (!r) throw std::logic_error("class inverse left the group");
    inv_[i] = *r;
    diagonal_[i] = reps_[i].is_diagonal();
  }

  for (int i = 0; i < kNumClasses; ++i) {
    Mat2 adj = reps_[i].adjoint();
    for (int pi = 1; pi <= 3; ++pi) {
      Mat2 conj = reps_[i] * pauli_matrix(static_cast<Pauli>(pi)) * adj;
      bool found = false;
      for (int qi = 1; qi <= 3 && !found; ++qi) {
        Mat2 q = pauli_matrix(static_cast<Pauli>(qi));
        if (conj == q) {
          conj_[i][pi - 1] = {static_cast<Pauli>(qi), false};
          found = true;
        } else if (conj == q.times_omega_pow(4)) {
          conj_[i][pi - 1] = {static_cast<Pauli>(qi), true};
          found = true;
        }
      }
      if (!found) throw std::logic_error("Pauli conjugation not sign-definite");
    }
  }

  pauli_phase_[0] = 0;
  for (int p = 0; p <= 3; ++p) {
    auto r = resolve(pauli_matrix(static_cast<Pauli>(p)));
    if (!r) throw std::logic_error("Pauli matrix not in the group");
    pauli_letter_[r->cls] = static_cast<Pauli>(p);
    // sigma = w^k rep  =>  rep = w^(-k) sigma.
    pauli_phase_[r->cls] = static_cast<std::uint8_t>((8 - r->phase) & 7);
  }

  auto must_resolve = [&](const Mat2& m) {
    auto r = resolve(m);
    if (!r) throw std::logic_error("gate matrix not in the group");
    return *r;
  };
  id_ = must_resolve(matrix_identity());
  x_ = must_resolve(pauli_matrix(Pauli::X));
  y_ = must_resolve(pauli_matrix(Pauli::Y));
  z_ = must_resolve(pauli_matrix(Pauli::Z));
  h_ = must_resolve(H);
  s_ = must_resolve(S);
  sdg_ = must_resolve(S.adjoint());
  hz_ = must_resolve(H * pauli_matrix(Pauli::Z));
  lc_pivot_ = must_resolve(matrix_exp_px());
  lc_neighbor_ = must_resolve(matrix_exp_mz());
  Mat2 sp = matrix_identity();
  for (int k = 0; k < 4; ++k) {
    s_pow_[k] = must_resolve(sp);
    sp = sp * S;
  }

  // Shortest word over {lc_pivot, lc_neighbor} (as right multipliers)
  // reaching a diagonal class, by reverse breadth-first search.
  for (int i = 0; i < kNumClasses; ++i) reduce_[i] = diagonal_[i] ? "" : "?";
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < kNumClasses; ++i) {
      if (reduce_[i] != "?") continue;
      int via_x = mul_[i][lc_pivot_.cls].cls;
      int via_z = mul_[i][lc_neighbor_.cls].cls;
      const std::string* best = nullptr;
      char move = 0;
      if (reduce_[via_x] != "?" &&
          (!best || reduce_[via_x].size() < best->size())) {
        best = &reduce_[via_x];
        move = 'x';
      }
      if (reduce_[via_z] != "?" &&
          (!best || reduce_[via_z].size() < best->size())) {
        best = &reduce_[via_z];
        move = 'z';
      }
      if (best) {
        reduce_[i] = move + *best;
        grew = true;
      }
    }
  }
  for (int i = 0; i < kNumClasses; ++i) {
    if (reduce_[i] == "?") {
      throw std::logic_error("class not reducible to diagonal form");
    }
  }
}

const CliffordTables& CliffordTables::get() {
  static const CliffordTables tables;
  return tables;
}

}  // namespace qgsum
