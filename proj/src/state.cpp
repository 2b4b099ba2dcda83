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

#include "qgsum/state.hpp"

#include <unordered_map>

namespace qgsum {

StabilizerTerm StabilizerTerm::plus_state(int n) {
  return {CycCoeff::one(), std::vector<std::uint8_t>(n, 0), Graph(n)};
}

StabilizerTerm StabilizerTerm::zero_state(int n) {
  const CliffordTables& tables = CliffordTables::get();
  return {CycCoeff::one(),
          std::vector<std::uint8_t>(n, tables.h().cls), Graph(n)};
}

std::uint64_t term_basis_hash(const StabilizerTerm& t) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (std::uint8_t v : t.vops) mix(v);
  for (int v = 0; v < t.graph.num_vertices(); ++v) {
    for (std::uint64_t w : t.graph.neighbors(v).words()) mix(w);
  }
  return h;
}

std::size_t collect(StateSum& sum) {
  // Small sums (the usual case right after a gate) are collected by direct
  // comparison; larger ones go through hash buckets confirmed by exact
  // comparison.
  const bool use_hash = sum.terms.size() > 8;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<StabilizerTerm> out;
  out.reserve(sum.terms.size());
  for (StabilizerTerm& t : sum.terms) {
    std::size_t found = out.size();
    if (use_hash) {
      std::vector<std::size_t>& bucket = buckets[term_basis_hash(t)];
      for (std::size_t idx : bucket) {
        if (out[idx].same_basis(t)) {
          found = idx;
          break;
        }
      }
      if (found == out.size()) bucket.push_back(out.size());
    } else {
      for (std::size_t idx = 0; idx < out.size(); ++idx) {
        if (out[idx].same_basis(t)) {
          found = idx;
          break;
        }
      }
    }
    if (found == out.size()) {
      out.push_back(std::move(t));
    } else {
      out[found].coeff += t.coeff;
    }
  }
  std::size_t dropped = 0;
  std::vector<StabilizerTerm> kept;
  kept.reserve(out.size());
  for (StabilizerTerm& t : out) {
    if (t.coeff.is_zero()) {
      ++dropped;
    } else {
      kept.push_back(std::move(t));
    }
  }
  sum.terms = std::move(kept);
  return dropped;
}

}  // namespace qgsum
