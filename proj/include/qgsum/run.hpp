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

#ifndef QGSUM_RUN_HPP
#define QGSUM_RUN_HPP

#include <cstdint>
#include <string>

#include "qgsum/circuit.hpp"
#include "qgsum/state.hpp"

namespace qgsum {

struct RunOptions {
  bool no_merge = false;
  bool verify = false;       // replay the circuit on the dense oracle
  bool amplitudes = false;   // include an amplitude dump in reports
  int oracle_cap = 16;       // max qubits for dense work
};

struct RunStats {
  std::size_t final_terms = 0;   // upper bound on the stabilizer rank
  std::size_t peak_terms = 0;
  std::uint64_t merges = 0;
  std::uint64_t cancellations = 0;
  std::size_t clifford_gates = 0;
  std::size_t c3_gates = 0;
  double avg_degree = 0.0;  // mean over final terms
  double wall_ms = 0.0;
  int verified = -1;  // 1 pass, 0 fail, -1 not requested
};

struct RunResult {
  Circuit circuit;
  StateSum sum;
  RunStats stats;
};

// Runs the circuit from its initial state; errors from gate application are
// rethrown with the offending gate's position.  With opts.verify (and within
// opts.oracle_cap) the final sum is compared exactly against a dense replay
// of the whole circuit.
RunResult run_circuit(const Circuit& c, const RunOptions& opts);

std::string report_json(const RunResult& r, const RunOptions& opts);
std::string report_text(const RunResult& r, const RunOptions& opts);

}  // namespace qgsum

#endif  // QGSUM_RUN_HPP
