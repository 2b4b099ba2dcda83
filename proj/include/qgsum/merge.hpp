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

#ifndef QGSUM_MERGE_HPP
#define QGSUM_MERGE_HPP

#include <cstdint>
#include <optional>

#include "qgsum/state.hpp"

namespace qgsum::merge {

struct MergeStats {
  std::uint64_t merges = 0;
  std::uint64_t cancellations = 0;
};

struct MergeOutcome {
  enum Kind { kMerged, kCancelled } kind;
  StabilizerTerm term;  // meaningful for kMerged
};

// Attempts to rewrite t1 + t2 as one term.  Succeeds when the graphs are
// identical, the vops differ qubit-wise by Paulis, and the coefficient ratio
// works out to a power of i; absent means not mergeable by this rule.
// Requires both coefficients non-zero.
std::optional<MergeOutcome> try_merge(const StabilizerTerm& t1,
                                      const StabilizerTerm& t2);

// collect, then greedy same-graph pair merging to a fixpoint, in
// deterministic order.  Preserves the denoted vector exactly.
void normalize(StateSum& sum, MergeStats* stats = nullptr);

}  // namespace qgsum::merge

#endif  // QGSUM_MERGE_HPP
