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

#ifndef QGSUM_BENCH_HPP
#define QGSUM_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qgsum/gates.hpp"

namespace qgsum::bench {

// Times single C3-gate applications on random vop-decorated graph states
// with n qubits and target average degree d, one term per measurement.
struct BenchConfig {
  std::vector<int> qubit_counts = {64, 128, 256};
  std::vector<int> degrees = {4, 8};
  int reps = 100;
  std::uint64_t seed = 12345;
  Gate gate = Gate::CCZ;
};

struct BenchRow {
  int n = 0;
  int d = 0;
  double median_us = 0.0;
  double mean_us = 0.0;
  int reps = 0;
};

// Ratio of median times when one parameter doubles and the other is fixed.
struct BenchRatio {
  std::string label;
  double ratio = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchRatio> ratios;
};

BenchReport run_bench(const BenchConfig& cfg);

std::string bench_json(const BenchReport& report);
std::string bench_text(const BenchReport& report);

}  // namespace qgsum::bench

#endif  // QGSUM_BENCH_HPP
