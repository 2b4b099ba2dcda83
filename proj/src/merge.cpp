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

#include "qgsum/merge.hpp"

#include <stdexcept>

#include "qgsum/c3engine.hpp"

namespace qgsum::merge {

std::optional<MergeOutcome> try_merge(const StabilizerTerm& t1,
                                      const StabilizerTerm& t2) {
  if (t1.coeff.is_zero() || t2.coeff.is_zero()) {
    throw std::invalid_argument("try_merge: zero coefficient");
  }
  if (!(t1.graph == t2.graph)) return std::nullopt;
  const CliffordTables& tables = CliffordTables::get();
  const int n = t1.num_qubits();

  // vops1^-1 * vops2 must be a Pauli on every qubit; then
  // t1 + t2 = c1 * vops1 * (I + rho * P) |G>.
  PauliProduct p(n);
  int omega_exp = 0;
  for (int q = 0; q < n; ++q) {
    PhasedClass inv1 = tables.inv(t1.vops[q]);
    PhasedClass v = tables.compose(inv1, PhasedClass{t2.vops[q], 0});
    if (!tables.is_pauli(v.cls)) return std::nullopt;
    omega_exp += v.phase + tables.pauli_phase(v.cls);
    p.set_letter(q, tables.pauli_letter(v.cls));
  }

  auto [kp, B] = c3::pauli_to_z(t1.graph, p);
  // Mergeable iff rho * i^kp is a power of i, i.e.
  // c2 * w^(omega_exp + 2 kp) == c1 * i^k for some k.
  CycCoeff lhs = t2.coeff.times_omega_pow(omega_exp + 2 * kp);
  int k = -1;
  for (int cand = 0; cand < 4; ++cand) {
    if (lhs == t1.coeff.times_omega_pow(2 * cand)) {
      k = cand;
      break;
    }
  }
  if (k < 0) return std::nullopt;

  if (!B.any()) {
    if (k == 2) return MergeOutcome{MergeOutcome::kCancelled, {}};
    StabilizerTerm out = t1;
    switch (k) {
      case 0:
        out.coeff *= CycCoeff(2, 0, 0, 0, 0);
        break;
      case 1:
        out.coeff *= CycCoeff(1, 0, 1, 0, 0);
        break;
      case 3:
        out.coeff *= CycCoeff(1, 0, -1, 0, 0);
        break;
    }
    return MergeOutcome{MergeOutcome::kMerged, std::move(out)};
  }
  StabilizerTerm out = t1;
  c3::apply_z_projector(out, k, B);
  return MergeOutcome{MergeOutcome::kMerged, std::move(out)};
}

void normalize(StateSum& sum, MergeStats* stats) {
  MergeStats local;
  MergeStats& st = stats ? *stats : local;
  st.cancellations += collect(sum);

  // Greedy fixpoint: scan same-graph pairs in index order, restart after
  // every rewrite.  Each rewrite shrinks the term list, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sum.terms.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < sum.terms.size() && !changed; ++j) {
        if (!(sum.terms[i].graph == sum.terms[j].graph)) continue;
        std::optional<MergeOutcome> out =
            try_merge(sum.terms[i], sum.terms[j]);
        if (!out) continue;
        if (out->kind == MergeOutcome::kCancelled) {
          ++st.cancellations;
          sum.terms.erase(sum.terms.begin() + j);
          sum.terms.erase(sum.terms.begin() + i);
        } else {
          ++st.merges;
          sum.terms[i] = std::move(out->term);
          sum.terms.erase(sum.terms.begin() + j);
        }
        st.cancellations += collect(sum);
        changed = true;
      }
    }
  }
}

}  // namespace qgsum::merge
