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

#ifndef QGSUM_ORACLE_HPP
#define QGSUM_ORACLE_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "qgsum/gates.hpp"
#include "qgsum/state.hpp"

// Exact dense state vectors over the coefficient ring for small qubit
// counts.  This is the ground truth every property test compares against;
// it shares the exact ring with the core so comparisons are bit-exact, and
// it is deliberately simple - it is never on a hot path.
namespace qgsum::oracle {

inline constexpr int kDefaultCap = 16;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(int n, int cap)
      : std::runtime_error("dense oracle refused: " + std::to_string(n) +
                           " qubits exceeds cap " + std::to_string(cap)) {}
};

// Amplitudes indexed with qubit 0 as the most significant bit.
using DenseVec = std::vector<CycCoeff>;

DenseVec zero_vector(int n, int cap = kDefaultCap);
// |index>.
DenseVec basis_state(int n, std::uint64_t index, int cap = kDefaultCap);
// |+...+>.
DenseVec plus_state(int n, int cap = kDefaultCap);

// Row-major exact matrix, dim x dim.
struct DenseMat {
  int dim = 0;
  std::vector<CycCoeff> m;

  explicit DenseMat(int dim_) : dim(dim_), m(std::size_t(dim_) * dim_) {}
  CycCoeff& at(int r, int c) { return m[std::size_t(r) * dim + c]; }
  const CycCoeff& at(int r, int c) const { return m[std::size_t(r) * dim + c]; }
  static DenseMat identity(int dim);
  friend DenseMat operator*(const DenseMat& a, const DenseMat& b);
  friend DenseMat operator+(const DenseMat& a, const DenseMat& b);
  DenseMat scaled(const CycCoeff& c) const;
  friend bool operator==(const DenseMat&, const DenseMat&) = default;
};

// Exact matrix of a supported gate on gate_arity(g) qubits, first operand
// most significant.
DenseMat gate_matrix(Gate g);

void apply_mat2(DenseVec& vec, int q, const Mat2& m);
void apply_gate(DenseVec& vec, Gate g, std::span<const int> operands);
// Embeds a k-qubit matrix on the given operands.
void apply_matrix(DenseVec& vec, const DenseMat& m,
                  std::span<const int> operands);

DenseVec term_to_vector(const StabilizerTerm& t, int cap = kDefaultCap);
DenseVec sum_to_vector(const StateSum& s, int cap = kDefaultCap);

bool sums_equal(const StateSum& a, const StateSum& b, int cap = kDefaultCap);

}  // namespace qgsum::oracle

#endif  // QGSUM_ORACLE_HPP
