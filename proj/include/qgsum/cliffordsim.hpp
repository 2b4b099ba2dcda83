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

#ifndef QGSUM_CLIFFORDSIM_HPP
#define QGSUM_CLIFFORDSIM_HPP

#include <span>

#include "qgsum/gates.hpp"
#include "qgsum/state.hpp"

// Clifford gate application on a single term, keeping the vops+graph form
// closed.  Every operation here is an exact vector identity, coefficient
// included.
namespace qgsum::sim {

// vops[v] <- op * vops[v]; the w-phase goes into the coefficient.
void apply_outer(StabilizerTerm& t, int v, PhasedClass op);
// vops[v] <- vops[v] * op.
void apply_inner(StabilizerTerm& t, int v, PhasedClass op);

// Rewrites graph <- local complement at v with the compensating local
// Cliffords composed onto the vops, an exact identity.  Requires
// degree(v) >= 1.
void local_complement(StabilizerTerm& t, int v);

void apply_cz(StabilizerTerm& t, int a, int b);

// H, S, SDG, X, Y, Z, CZ, CX, SWAP.
void apply_clifford(StabilizerTerm& t, Gate g, std::span<const int> operands);

// One row of the generated two-qubit CZ rewrite table:
//   CZ (rep(va) (x) rep(vb)) |G_edge> =
//       w^phase (rep(va') (x) rep(vb')) |G_edge'>
// The entry holds at operator level when both inputs are diagonal, on the
// subspace spanned by {|0>,|1>} (x) |+> (or its mirror) when exactly one is,
// and on the two-qubit state when neither is; apply_cz only consults it in
// contexts covered by those strengths.
struct CzEntry {
  std::uint8_t va, vb;
  std::uint8_t edge;
  std::uint8_t phase;
};
const CzEntry& cz_table_entry(int va, int vb, bool edge);

StabilizerTerm initial_term(int n, bool plus);

}  // namespace qgsum::sim

#endif  // QGSUM_CLIFFORDSIM_HPP
