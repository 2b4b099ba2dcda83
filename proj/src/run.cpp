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

#include "qgsum/run.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qgsum/c3engine.hpp"
#include "qgsum/cliffordsim.hpp"
#include "qgsum/merge.hpp"
#include "qgsum/oracle.hpp"

namespace qgsum {

namespace {

using nlohmann::json;

json coeff_json(const CycCoeff& c) {
  return json{{"a", c.a},      {"b", c.b}, {"c", c.c},
              {"d", c.d},      {"h", c.h}, {"approx", c.approx_str()}};
}

json term_json(const StabilizerTerm& t) {
  const CliffordTables& tables = CliffordTables::get();
  json vops = json::array();
  for (std::uint8_t v : t.vops) vops.push_back(tables.word(v));
  json edges = json::array();
  for (auto [a, b] : t.graph.edge_list()) {
    edges.push_back(json::array({a + 1, b + 1}));
  }
  return json{{"coeff", coeff_json(t.coeff)},
              {"vops", std::move(vops)},
              {"edges", std::move(edges)}};
}

json stats_json(const RunStats& s) {
  return json{{"terms", s.final_terms},
              {"peak_terms", s.peak_terms},
              {"merges", s.merges},
              {"cancellations", s.cancellations},
              {"clifford_gates", s.clifford_gates},
              {"c3_gates", s.c3_gates},
              {"avg_degree", s.avg_degree},
              {"wall_ms", s.wall_ms}};
}

double mean_degree(const StateSum& sum) {
  if (sum.terms.empty()) return 0.0;
  double acc = 0.0;
  for (const StabilizerTerm& t : sum.terms) acc += t.graph.average_degree();
  return acc / static_cast<double>(sum.terms.size());
}

oracle::DenseVec dense_replay(const Circuit& c, int cap) {
  oracle::DenseVec vec = c.init_plus ? oracle::plus_state(c.n, cap)
                                     : oracle::basis_state(c.n, 0, cap);
  for (const GateOp& op : c.gates) {
    oracle::apply_gate(vec, op.gate, op.operands);
  }
  return vec;
}

}  // namespace

RunResult run_circuit(const Circuit& c, const RunOptions& opts) {
  if ((opts.verify || opts.amplitudes) && c.n > opts.oracle_cap) {
    throw oracle::CapExceeded(c.n, opts.oracle_cap);
  }
  RunResult result;
  result.circuit = c;
  // Force lazy table construction out of the timed region.
  CliffordTables::get();
  sim::cz_table_entry(0, 0, false);
  auto start = std::chrono::steady_clock::now();

  StateSum sum = StateSum::single(sim::initial_term(c.n, c.init_plus));
  RunStats& stats = result.stats;
  stats.peak_terms = 1;
  merge::MergeStats mstats;
  std::size_t gate_index = 0;
  for (const GateOp& op : c.gates) {
    ++gate_index;
    try {
      if (gate_is_c3(op.gate)) {
        ++stats.c3_gates;
        sum = c3::apply_c3(std::move(sum), op.gate, op.operands,
                           !opts.no_merge, &mstats);
      } else {
        ++stats.clifford_gates;
        for (StabilizerTerm& t : sum.terms) {
          sim::apply_clifford(t, op.gate, op.operands);
        }
      }
    } catch (const CoeffOverflow&) {
      throw;  // keep the type so callers can map it to the right error code
    } catch (const std::exception& e) {
      throw std::runtime_error("gate " + std::to_string(gate_index) + " (" +
                               gate_name(op.gate) + ", line " +
                               std::to_string(op.line) + "): " + e.what());
    }
    stats.peak_terms = std::max(stats.peak_terms, sum.terms.size());
  }
  stats.merges = mstats.merges;
  stats.cancellations = mstats.cancellations;
  stats.final_terms = sum.terms.size();
  stats.avg_degree = mean_degree(sum);

  if (opts.verify) {
    oracle::DenseVec expected = dense_replay(c, opts.oracle_cap);
    oracle::DenseVec actual = oracle::sum_to_vector(sum, opts.oracle_cap);
    stats.verified = expected == actual ? 1 : 0;
  }

  auto end = std::chrono::steady_clock::now();
  stats.wall_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  result.sum = std::move(sum);
  return result;
}

std::string report_json(const RunResult& r, const RunOptions& opts) {
  json out;
  out["n"] = r.sum.n;
  json terms = json::array();
  for (const StabilizerTerm& t : r.sum.terms) terms.push_back(term_json(t));
  out["terms"] = std::move(terms);
  out["stats"] = stats_json(r.stats);
  if (r.stats.verified >= 0) out["verified"] = r.stats.verified == 1;
  if (opts.amplitudes) {
    oracle::DenseVec vec = oracle::sum_to_vector(r.sum, opts.oracle_cap);
    json amps = json::array();
    for (const CycCoeff& a : vec) {
      std::complex<double> z = a.to_complex();
      char re[32], im[32];
      std::snprintf(re, sizeof re, "%.12g", z.real());
      std::snprintf(im, sizeof im, "%.12g", z.imag());
      amps.push_back(json::array({re, im}));
    }
    out["amplitudes"] = std::move(amps);
  }
  return out.dump(2);
}

std::string report_text(const RunResult& r, const RunOptions& opts) {
  const CliffordTables& tables = CliffordTables::get();
  std::ostringstream out;
  out << "n = " << r.sum.n << ", terms = " << r.sum.terms.size() << "\n";
  std::size_t idx = 0;
  for (const StabilizerTerm& t : r.sum.terms) {
    out << "  [" << idx++ << "] " << std::setw(22) << t.coeff.approx_str()
        << "  vops ";
    for (std::size_t q = 0; q < t.vops.size(); ++q) {
      const std::string& w = tables.word(t.vops[q]);
      out << (q ? "," : "") << (w.empty() ? "I" : w);
    }
    out << "  edges";
    auto edges = t.graph.edge_list();
    if (edges.empty()) out << " -";
    for (auto [a, b] : edges) out << " {" << a + 1 << "," << b + 1 << "}";
    out << "\n";
  }
  const RunStats& s = r.stats;
  out << "stats: peak_terms=" << s.peak_terms << " merges=" << s.merges
      << " cancellations=" << s.cancellations
      << " clifford_gates=" << s.clifford_gates << " c3_gates=" << s.c3_gates
      << " avg_degree=" << std::fixed << std::setprecision(3) << s.avg_degree
      << " wall_ms=" << s.wall_ms << "\n";
  if (s.verified >= 0) {
    out << "verified: " << (s.verified == 1 ? "true" : "false") << "\n";
  }
  if (opts.amplitudes) {
    oracle::DenseVec vec = oracle::sum_to_vector(r.sum, opts.oracle_cap);
    out << "amplitudes:\n";
    for (std::size_t i = 0; i < vec.size(); ++i) {
      out << "  |";
      for (int q = 0; q < r.sum.n; ++q) {
        out << ((i >> (r.sum.n - 1 - q)) & 1);
      }
      out << ">  " << vec[i].approx_str() << "\n";
    }
  }
  return out.str();
}

}  // namespace qgsum
