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

#ifndef QGSUM_C3ENGINE_HPP
#define QGSUM_C3ENGINE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qgsum/gates.hpp"
#include "qgsum/merge.hpp"
#include "qgsum/state.hpp"

// Third-level gate application: each supported gate splits into two branches
// of scalar * projector-product * Clifford prefix; projectors are pushed
// through the vops, rewritten to Z form on the graph, and folded back into a
// single decorated graph state, so a gate yields at most two terms per input
// term before merging.
namespace qgsum::c3 {

struct C3Branch {
  CycCoeff scalar;
  // Each entry denotes the operator I + i^{p.s} * (Pauli part of p); the
  // list is ordered as written, so the last entry acts first.
  std::vector<PauliProduct> projectors;
  // Clifford prefix applied before any projector.
  std::vector<std::pair<Gate, int>> cliffords;
};

struct C3Decomposition {
  std::vector<C3Branch> branches;
};

// Exact two-branch decomposition of T, CS, CH, CCZ, CCX or CSWAP on the
// given distinct operands of an n-qubit register.
C3Decomposition decompose_c3(Gate g, std::span<const int> operands, int n);

// P' with P * (tensor vops) = (tensor vops) * P' as operators.
PauliProduct push_pauli_through_vops(const StabilizerTerm& t,
                                     const PauliProduct& p);

// (k, B) with p |G> = i^k prod_{j in B} Z_j |G>.
std::pair<int, Bitset> pauli_to_z(const Graph& g, const PauliProduct& p);

// Rewrites (I + i^k prod_{j in B} Z_j) applied to the term's graph-state
// part as a single term, B non-empty; pivot is min(B).  Emits local
// Cliffords composed onto the vops from the inside, edge toggles, and a
// sqrt(2) coefficient factor.
void apply_z_projector(StabilizerTerm& t, int k, const Bitset& B);

// Applies I + i^{p.s} P; absent when the term is annihilated exactly.
std::optional<StabilizerTerm> apply_projector(StabilizerTerm t,
                                              const PauliProduct& p);

// Applies one C3 gate to each term (at most two outputs per input term),
// then normalizes unless merging was disabled.  Takes the sum by value; pass
// with std::move to avoid the copy.
StateSum apply_c3(StateSum sum, Gate g, std::span<const int> operands,
                  bool do_merge = true, merge::MergeStats* stats = nullptr);

}  // namespace qgsum::c3

#endif  // QGSUM_C3ENGINE_HPP
