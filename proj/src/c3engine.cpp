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

#include "qgsum/c3engine.hpp"

#include <stdexcept>

#include "qgsum/cliffordsim.hpp"

namespace qgsum::c3 {

namespace {

PauliProduct projector(int n, std::initializer_list<std::pair<int, Pauli>>
                                  letters,
                       int i_power) {
  PauliProduct p(n);
  for (auto [q, letter] : letters) p.set_letter(q, letter);
  p.s = static_cast<std::uint8_t>((p.s + i_power) & 3);
  return p;
}

}  // namespace

C3Decomposition decompose_c3(Gate g, std::span<const int> operands, int n) {
  if (static_cast<int>(operands.size()) != gate_arity(g)) {
    throw std::invalid_argument("gate arity mismatch");
  }
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (operands[i] < 0 || operands[i] >= n) {
      throw std::out_of_range("gate operand out of range");
    }
    for (std::size_t j = i + 1; j < operands.size(); ++j) {
      if (operands[i] == operands[j]) {
        throw std::invalid_argument("gate operands must be distinct");
      }
    }
  }
  const CycCoeff half = CycCoeff::half();
  const CycCoeff quarter = half * half;
  C3Decomposition d;
  switch (g) {
    case Gate::T: {
      int a = operands[0];
      d.branches.push_back({half, {projector(n, {{a, Pauli::Z}}, 0)}, {}});
      d.branches.push_back(
          {half * CycCoeff::omega_pow(1), {projector(n, {{a, Pauli::Z}}, 2)}, {}});
      return d;
    }
    case Gate::CS: {
      int a = operands[0], b = operands[1];
      d.branches.push_back({half, {projector(n, {{a, Pauli::Z}}, 0)}, {}});
      d.branches.push_back(
          {half, {projector(n, {{a, Pauli::Z}}, 2)}, {{Gate::S, b}}});
      return d;
    }
    case Gate::CH: {
      int a = operands[0], b = operands[1];
      d.branches.push_back({half, {projector(n, {{a, Pauli::Z}}, 0)}, {}});
      d.branches.push_back(
          {half, {projector(n, {{a, Pauli::Z}}, 2)}, {{Gate::H, b}}});
      return d;
    }
    case Gate::CCZ: {
      int a = operands[0], b = operands[1], c = operands[2];
      d.branches.push_back({CycCoeff::one(), {}, {}});
      d.branches.push_back({-quarter,
                            {projector(n, {{a, Pauli::Z}}, 2),
                             projector(n, {{b, Pauli::Z}}, 2),
                             projector(n, {{c, Pauli::Z}}, 2)},
                            {}});
      return d;
    }
    case Gate::CCX: {
      int a = operands[0], b = operands[1], c = operands[2];
      d.branches.push_back({CycCoeff::one(), {}, {}});
      d.branches.push_back({-quarter,
                            {projector(n, {{a, Pauli::Z}}, 2),
                             projector(n, {{b, Pauli::Z}}, 2),
                             projector(n, {{c, Pauli::X}}, 2)},
                            {}});
      return d;
    }
    case Gate::CSWAP: {
      int a = operands[0], b = operands[1], c = operands[2];
      d.branches.push_back({CycCoeff::one(), {}, {}});
      d.branches.push_back(
          {-quarter,
           {projector(n, {{a, Pauli::Z}}, 2),
            projector(n, {{b, Pauli::Z}, {c, Pauli::Z}}, 2),
            projector(n, {{b, Pauli::X}, {c, Pauli::X}}, 2)},
           {}});
      return d;
    }
    default:
      throw std::invalid_argument("not a supported C3 gate");
  }
}

PauliProduct push_pauli_through_vops(const StabilizerTerm& t,
                                     const PauliProduct& p) {
  const CliffordTables& tables = CliffordTables::get();
  PauliProduct out(t.num_qubits());
  out.s = p.s;
  for (int q = 0; q < t.num_qubits(); ++q) {
    bool has_x = p.x.test(q);
    bool has_z = p.z.test(q);
    if (!has_x && !has_z) continue;
    int inv_cls = tables.inv(t.vops[q]).cls;
    Pauli letter = Pauli::I;
    int phase = 0;  // power of i
    if (has_x) {
      SignedPauli sp = tables.conjugate_pauli(inv_cls, Pauli::X);
      letter = sp.p;
      if (sp.negative) phase += 2;
    }
    if (has_z) {
      SignedPauli sp = tables.conjugate_pauli(inv_cls, Pauli::Z);
      if (sp.negative) phase += 2;
      PauliMul pm = pauli_mul(letter, sp.p);
      letter = pm.p;
      phase += pm.phase_exp;
    }
    out.set_letter(q, letter);
    out.s = static_cast<std::uint8_t>((out.s + phase) & 3);
  }
  return out;
}

std::pair<int, Bitset> pauli_to_z(const Graph& g, const PauliProduct& p) {
  int k = p.s;
  Bitset b = p.z;
  // Absorb X factors rightmost-first: X_a anticommutes with a Z_a already
  // collected in b, then X_a|G> = prod_{nbhd(a)} Z |G>.
  p.x.for_each_set_desc([&](int a) {
    if (b.test(a)) k += 2;
    b ^= g.neighbors(a);
  });
  return {k & 3, std::move(b)};
}

void apply_z_projector(StabilizerTerm& t, int k, const Bitset& B) {
  if (!B.any()) throw std::logic_error("apply_z_projector: empty support");
  const CliffordTables& tables = CliffordTables::get();
  k &= 3;
  const int pivot = B.first();
  Bitset A = t.graph.neighbors(pivot);
  A.set(pivot);

  // (I + i^k prod_B Z)|G> = sqrt(2) H_p Z_p prod_{x,y in A} CS_{x,y}^k
  // prod_{x in A, y in B} CZ_{x,y} |G>, products over ordered pairs with
  // CU_{a,a} read as U_a.  Diagonal CS pairs leave S^k on A; off-diagonal
  // pairs match up into CZ^k edge toggles; the CZ product leaves Z on the
  // intersection and toggles each cross pair once per ordered occurrence.
  t.coeff *= CycCoeff::sqrt2();

  Bitset a_and_b = A;
  a_and_b &= B;
  A.for_each_set([&](int q) {
    PhasedClass emitted = tables.s_pow(k);
    if (a_and_b.test(q)) emitted = tables.compose(emitted, tables.z());
    if (q == pivot) emitted = tables.compose(tables.hz(), emitted);
    sim::apply_inner(t, q, emitted);
  });
  if (k & 1) t.graph.toggle_clique(A);
  t.graph.toggle_cross(A, B);
}

std::optional<StabilizerTerm> apply_projector(StabilizerTerm t,
                                              const PauliProduct& p) {
  PauliProduct pushed = push_pauli_through_vops(t, p);
  auto [k, B] = pauli_to_z(t.graph, pushed);
  if (!B.any()) {
    // Scalar residue 1 + i^k; k = 2 annihilates the term exactly.
    switch (k) {
      case 0:
        t.coeff *= CycCoeff(2, 0, 0, 0, 0);
        break;
      case 1:
        t.coeff *= CycCoeff(1, 0, 1, 0, 0);
        break;
      case 2:
        return std::nullopt;
      case 3:
        t.coeff *= CycCoeff(1, 0, -1, 0, 0);
        break;
    }
    return t;
  }
  apply_z_projector(t, k, B);
  return t;
}

StateSum apply_c3(StateSum sum, Gate g, std::span<const int> operands,
                  bool do_merge, merge::MergeStats* stats) {
  C3Decomposition decomp = decompose_c3(g, operands, sum.n);
  StateSum out(sum.n);
  for (StabilizerTerm& term : sum.terms) {
    for (std::size_t bi = 0; bi < decomp.branches.size(); ++bi) {
      const C3Branch& branch = decomp.branches[bi];
      // The last branch takes the input term instead of copying it.
      StabilizerTerm t = bi + 1 == decomp.branches.size() ? std::move(term)
                                                          : term;
      for (auto [gate, q] : branch.cliffords) {
        int ops[1] = {q};
        sim::apply_clifford(t, gate, ops);
      }
      t.coeff *= branch.scalar;
      bool alive = true;
      for (auto it = branch.projectors.rbegin();
           alive && it != branch.projectors.rend(); ++it) {
        std::optional<StabilizerTerm> next = apply_projector(std::move(t), *it);
        if (next) {
          t = std::move(*next);
        } else {
          alive = false;
        }
      }
      if (alive) out.terms.push_back(std::move(t));
    }
  }
  if (do_merge) merge::normalize(out, stats);
  return out;
}

}  // namespace qgsum::c3
