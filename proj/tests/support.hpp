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

#ifndef QGSUM_TESTS_SUPPORT_HPP
#define QGSUM_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qgsum/circuit.hpp"
#include "qgsum/oracle.hpp"
#include "qgsum/state.hpp"

namespace qgsum::test {

using Rng = std::mt19937_64;

inline Graph random_graph(Rng& rng, int n, double p = 0.4) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) g.toggle_edge(a, b);
    }
  }
  return g;
}

inline CycCoeff random_nonzero_coeff(Rng& rng) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(0, 2);
  for (;;) {
    CycCoeff c(num(rng), num(rng), num(rng), num(rng),
               static_cast<std::uint32_t>(den(rng)));
    if (!c.is_zero()) return c;
  }
}

// Any (vops, graph) pair is a valid stabilizer term, so uniform sampling is
// an implementation-independent generator.
inline StabilizerTerm random_term(Rng& rng, int n, double edge_p = 0.4) {
  std::uniform_int_distribution<int> cls(0, CliffordTables::kNumClasses - 1);
  std::vector<std::uint8_t> vops(n);
  for (auto& v : vops) v = static_cast<std::uint8_t>(cls(rng));
  return {random_nonzero_coeff(rng), std::move(vops),
          random_graph(rng, n, edge_p)};
}

inline std::vector<int> random_operands(Rng& rng, int n, int arity) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> ops;
  while (static_cast<int>(ops.size()) < arity) {
    int q = pick(rng);
    bool dup = false;
    for (int o : ops) dup = dup || o == q;
    if (!dup) ops.push_back(q);
  }
  return ops;
}

inline GateOp random_gate(Rng& rng, int n, bool allow_c3) {
  static const std::vector<Gate> clifford = {
      Gate::X,  Gate::Y, Gate::Z,  Gate::H,   Gate::S,
      Gate::SDG, Gate::CX, Gate::CZ, Gate::SWAP};
  static const std::vector<Gate> c3_gates = {Gate::T,   Gate::CS,  Gate::CH,
                                             Gate::CCX, Gate::CCZ, Gate::CSWAP};
  std::uniform_int_distribution<int> which(0, 99);
  Gate g;
  if (allow_c3 && which(rng) < 30) {
    std::uniform_int_distribution<std::size_t> pick(0, c3_gates.size() - 1);
    g = c3_gates[pick(rng)];
    while (gate_arity(g) > n) g = c3_gates[pick(rng)];
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, clifford.size() - 1);
    g = clifford[pick(rng)];
    while (gate_arity(g) > n) g = clifford[pick(rng)];
  }
  return {g, random_operands(rng, n, gate_arity(g)), 0};
}

inline oracle::DenseVec dense_of(const StabilizerTerm& t) {
  return oracle::term_to_vector(t);
}

inline oracle::DenseVec dense_of(const StateSum& s) {
  return oracle::sum_to_vector(s);
}

}  // namespace qgsum::test

#endif  // QGSUM_TESTS_SUPPORT_HPP
