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

#ifndef QGSUM_STATE_HPP
#define QGSUM_STATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qgsum/clifford1q.hpp"
#include "qgsum/coeff.hpp"
#include "qgsum/graph.hpp"

namespace qgsum {

// i^s * prod_a X_a^{x_a} * prod_a Z_a^{z_a}, with every X factor to the left
// of every Z factor.  A Y letter is stored as i * X * Z (bits set on both
// sides, one unit added to s).
struct PauliProduct {
  Bitset x, z;
  std::uint8_t s = 0;  // power of i, mod 4

  PauliProduct() = default;
  explicit PauliProduct(int n) : x(n), z(n) {}

  int num_qubits() const { return x.size(); }

  // Installs a letter on a so-far untouched qubit.
  void set_letter(int q, Pauli p) {
    switch (p) {
      case Pauli::I:
        return;
      case Pauli::X:
        x.set(q);
        return;
      case Pauli::Z:
        z.set(q);
        return;
      case Pauli::Y:
        x.set(q);
        z.set(q);
        s = static_cast<std::uint8_t>((s + 1) & 3);
        return;
    }
  }

  bool has_support() const { return x.any() || z.any(); }
};

// coeff * (tensor of vop representatives) |G>.
struct StabilizerTerm {
  CycCoeff coeff;
  std::vector<std::uint8_t> vops;  // local Clifford class per qubit
  Graph graph;

  StabilizerTerm() = default;
  StabilizerTerm(CycCoeff c, std::vector<std::uint8_t> v, Graph g)
      : coeff(std::move(c)), vops(std::move(v)), graph(std::move(g)) {}

  int num_qubits() const { return graph.num_vertices(); }

  // |+...+>: identity vops on the empty graph.
  static StabilizerTerm plus_state(int n);
  // |0...0>: H on every vertex of the empty graph.
  static StabilizerTerm zero_state(int n);

  // Same (vops, graph) pair; the identity under which coefficients add.
  bool same_basis(const StabilizerTerm& o) const {
    return vops == o.vops && graph == o.graph;
  }

  friend bool operator==(const StabilizerTerm&, const StabilizerTerm&) =
      default;
};

// Streaming hash of (vops, graph), used to bucket terms; buckets are always
// confirmed by exact comparison.
std::uint64_t term_basis_hash(const StabilizerTerm& t);

struct StateSum {
  int n = 0;
  std::vector<StabilizerTerm> terms;

  StateSum() = default;
  explicit StateSum(int n_) : n(n_) {}
  static StateSum single(StabilizerTerm t) {
    StateSum s(t.num_qubits());
    s.terms.push_back(std::move(t));
    return s;
  }
};

// Adds coefficients of terms with identical (vops, graph) into the first
// occurrence and drops terms whose coefficient is zero; surviving order is
// order of first appearance.  Returns the number of dropped zero terms.
std::size_t collect(StateSum& sum);

}  // namespace qgsum

#endif  // QGSUM_STATE_HPP
