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

// Command-line front end; all simulation goes through the C API in qgsum.h.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgsum.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailed = 2;

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitInputError;
}

struct StringDeleter {
  void operator()(char* s) const { qgs_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int run_simulate(const std::string& path, const std::string& format,
                 const qgs_run_options& opts) {
  std::ifstream in(path);
  if (!in) return fail("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  qgs_circuit* circuit = nullptr;
  if (qgs_circuit_parse(text.c_str(), &circuit) != QGS_OK) {
    return fail(std::string(qgs_last_error()) + " (" + path + ")");
  }
  std::unique_ptr<qgs_circuit, decltype(&qgs_circuit_free)> circuit_guard(
      circuit, qgs_circuit_free);

  qgs_result* result = nullptr;
  if (qgs_run(circuit, &opts, &result) != QGS_OK) {
    return fail(qgs_last_error());
  }
  std::unique_ptr<qgs_result, decltype(&qgs_result_free)> result_guard(
      result, qgs_result_free);

  ApiString report(format == "json" ? qgs_result_report_json(result)
                                    : qgs_result_report_text(result));
  if (!report) return fail(qgs_last_error());
  std::cout << report.get();
  if (format == "json") std::cout << "\n";

  if (opts.verify && qgs_result_verified(result) != 1) {
    std::cerr << "verification FAILED\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_bench(const std::vector<int>& qubits, const std::vector<int>& degrees,
              int reps, std::uint64_t seed, const std::string& gate,
              const std::string& format) {
  qgs_bench_options opts;
  qgs_bench_options_init(&opts);
  if (!qubits.empty()) {
    opts.qubit_counts = qubits.data();
    opts.num_qubit_counts = qubits.size();
  }
  if (!degrees.empty()) {
    opts.degrees = degrees.data();
    opts.num_degrees = degrees.size();
  }
  opts.reps = reps;
  opts.seed = seed;
  opts.gate = gate.c_str();

  char* json = nullptr;
  char* txt = nullptr;
  if (qgs_bench(&opts, &json, &txt) != QGS_OK) return fail(qgs_last_error());
  ApiString json_guard(json), text_guard(txt);
  std::cout << (format == "json" ? json : txt);
  if (format == "json") std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford+C3 circuit simulator over sums of decorated "
               "graph states"};
  app.require_subcommand(1);

  // simulate
  std::string path;
  std::string format = "text";
  qgs_run_options run_opts;
  qgs_run_options_init(&run_opts);
  bool no_merge = false, verify = false, amplitudes = false, stats = false;

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a circuit file and report the "
                                     "resulting sum of stabilizer terms");
  simulate->add_option("file", path, "circuit file")->required();
  simulate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  simulate->add_flag("--verify", verify,
                     "replay the circuit on the dense oracle and compare "
                     "exactly (exit code 2 on mismatch)");
  simulate->add_flag("--amplitudes", amplitudes,
                     "include the dense amplitude vector in the report");
  simulate->add_flag("--no-merge", no_merge,
                     "skip merging after C3 gates (raw split counts)");
  simulate->add_flag("--stats", stats,
                     "stats are always included; accepted for compatibility");
  simulate->add_option("--oracle-cap", run_opts.oracle_cap,
                       "dense oracle qubit cap for --verify/--amplitudes");

  // bench
  std::vector<int> bench_n, bench_d;
  int reps = 100;
  std::uint64_t seed = 12345;
  std::string bench_gate = "CCZ";
  std::string bench_format = "text";
  CLI::App* bench = app.add_subcommand(
      "bench", "Time single C3-gate applications on random decorated graph "
               "states with controlled qubit count and average degree");
  bench->add_option("--qubits", bench_n, "qubit counts (default 64 128 256)")
      ->delimiter(',');
  bench->add_option("--degrees", bench_d,
                    "target average degrees (default 4 8)")
      ->delimiter(',');
  bench->add_option("--reps", reps, "measurements per configuration");
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--gate", bench_gate, "C3 gate to time");
  bench->add_option("--format", bench_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) {
    run_opts.no_merge = no_merge ? 1 : 0;
    run_opts.verify = verify ? 1 : 0;
    run_opts.amplitudes = amplitudes ? 1 : 0;
    return run_simulate(path, format, run_opts);
  }
  return run_bench(bench_n, bench_d, reps, seed, bench_gate, bench_format);
}
