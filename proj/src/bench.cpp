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

#include "qgsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qgsum/c3engine.hpp"
#include "qgsum/cliffordsim.hpp"
#include "qgsum/state.hpp"

namespace qgsum::bench {

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int d) {
  Graph g(n);
  double p = n > 1 ? std::min(1.0, static_cast<double>(d) / (n - 1)) : 0.0;
  std::bernoulli_distribution edge(p);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) g.toggle_edge(a, b);
    }
  }
  return g;
}

StabilizerTerm random_term(std::mt19937_64& rng, int n, int d) {
  std::uniform_int_distribution<int> cls(0, CliffordTables::kNumClasses - 1);
  std::vector<std::uint8_t> vops(n);
  for (auto& v : vops) v = static_cast<std::uint8_t>(cls(rng));
  return {CycCoeff::one(), std::move(vops), random_graph(rng, n, d)};
}

std::vector<int> random_operands(std::mt19937_64& rng, int n, int arity) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> ops;
  while (static_cast<int>(ops.size()) < arity) {
    int q = pick(rng);
    if (std::find(ops.begin(), ops.end(), q) == ops.end()) ops.push_back(q);
  }
  return ops;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  BenchReport report;
  // Force lazy table construction out of the measurements.
  CliffordTables::get();
  sim::cz_table_entry(0, 0, false);
  for (int n : cfg.qubit_counts) {
    for (int d : cfg.degrees) {
      if (d >= n) continue;
      std::mt19937_64 rng(cfg.seed ^ (std::uint64_t(n) << 20) ^ d);
      std::vector<double> times_us;
      times_us.reserve(cfg.reps);
      std::size_t sink = 0;
      for (int rep = 0; rep < cfg.reps; ++rep) {
        StateSum sum = StateSum::single(random_term(rng, n, d));
        std::vector<int> ops = random_operands(rng, n, gate_arity(cfg.gate));
        auto t0 = std::chrono::steady_clock::now();
        StateSum out = c3::apply_c3(std::move(sum), cfg.gate, ops);
        auto t1 = std::chrono::steady_clock::now();
        sink += out.terms.size();
        times_us.push_back(
            std::chrono::duration<double, std::micro>(t1 - t0).count());
      }
      if (sink == 0) continue;  // unreachable; keeps the result live
      std::sort(times_us.begin(), times_us.end());
      BenchRow row;
      row.n = n;
      row.d = d;
      row.reps = cfg.reps;
      row.median_us = times_us[times_us.size() / 2];
      double total = 0.0;
      for (double t : times_us) total += t;
      row.mean_us = total / static_cast<double>(times_us.size());
      report.rows.push_back(row);
    }
  }

  auto median_at = [&](int n, int d) -> double {
    for (const BenchRow& row : report.rows) {
      if (row.n == n && row.d == d) return row.median_us;
    }
    return -1.0;
  };
  for (const BenchRow& row : report.rows) {
    double doubled_n = median_at(2 * row.n, row.d);
    if (doubled_n > 0 && row.median_us > 0) {
      std::ostringstream label;
      label << "n " << row.n << "->" << 2 * row.n << " @ d=" << row.d;
      report.ratios.push_back({label.str(), doubled_n / row.median_us});
    }
    double doubled_d = median_at(row.n, 2 * row.d);
    if (doubled_d > 0 && row.median_us > 0) {
      std::ostringstream label;
      label << "d " << row.d << "->" << 2 * row.d << " @ n=" << row.n;
      report.ratios.push_back({label.str(), doubled_d / row.median_us});
    }
  }
  return report;
}

std::string bench_json(const BenchReport& report) {
  nlohmann::json out;
  out["rows"] = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    out["rows"].push_back({{"n", row.n},
                           {"d", row.d},
                           {"median_us", row.median_us},
                           {"mean_us", row.mean_us},
                           {"reps", row.reps}});
  }
  out["doubling_ratios"] = nlohmann::json::array();
  for (const BenchRatio& r : report.ratios) {
    out["doubling_ratios"].push_back({{"label", r.label}, {"ratio", r.ratio}});
  }
  return out.dump(2);
}

std::string bench_text(const BenchReport& report) {
  std::ostringstream out;
  out << "per-C3-gate time on random decorated graph states (1 term)\n";
  out << "    n     d   median_us     mean_us   reps\n";
  for (const BenchRow& row : report.rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%5d %5d %11.2f %11.2f %6d\n", row.n,
                  row.d, row.median_us, row.mean_us, row.reps);
    out << line;
  }
  if (!report.ratios.empty()) {
    out << "doubling ratios (linear scaling in n*d predicts ~2x):\n";
    for (const BenchRatio& r : report.ratios) {
      char line[128];
      std::snprintf(line, sizeof line, "  %-20s %.2fx\n", r.label.c_str(),
                    r.ratio);
      out << line;
    }
  }
  return out.str();
}

}  // namespace qgsum::bench
