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

#include "qgsum.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qgsum/bench.hpp"
#include "qgsum/circuit.hpp"
#include "qgsum/oracle.hpp"
#include "qgsum/run.hpp"

struct qgs_circuit {
  qgsum::Circuit circuit;
};

struct qgs_result {
  qgsum::RunResult result;
  qgsum::RunOptions options;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qgsum::RunOptions to_run_options(const qgs_run_options* opts) {
  qgsum::RunOptions r;
  if (opts) {
    r.no_merge = opts->no_merge != 0;
    r.verify = opts->verify != 0;
    r.amplitudes = opts->amplitudes != 0;
    r.oracle_cap = opts->oracle_cap;
  }
  return r;
}

// Runs f, translating exceptions into error codes.
template <typename F>
int guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const qgsum::ParseError& e) {
    set_error(e.what());
    return QGS_ERR_PARSE;
  } catch (const qgsum::oracle::CapExceeded& e) {
    set_error(e.what());
    return QGS_ERR_CAP;
  } catch (const qgsum::CoeffOverflow& e) {
    set_error(e.what());
    return QGS_ERR_OVERFLOW;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QGS_ERR_BADARG;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QGS_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* qgs_version(void) { return "0.1.0"; }

const char* qgs_last_error(void) { return g_last_error.c_str(); }

void qgs_run_options_init(qgs_run_options* opts) {
  if (!opts) return;
  opts->no_merge = 0;
  opts->verify = 0;
  opts->amplitudes = 0;
  opts->oracle_cap = 16;
}

void qgs_bench_options_init(qgs_bench_options* opts) {
  if (!opts) return;
  opts->qubit_counts = nullptr;
  opts->num_qubit_counts = 0;
  opts->degrees = nullptr;
  opts->num_degrees = 0;
  opts->reps = 100;
  opts->seed = 12345;
  opts->gate = "CCZ";
}

int qgs_circuit_parse(const char* text, qgs_circuit** out) {
  if (!text || !out) {
    set_error("null argument");
    return QGS_ERR_BADARG;
  }
  *out = nullptr;
  return guarded([&] {
    auto* handle = new qgs_circuit{qgsum::parse_circuit(text)};
    *out = handle;
    return QGS_OK;
  });
}

void qgs_circuit_free(qgs_circuit* c) { delete c; }

int qgs_circuit_num_qubits(const qgs_circuit* c) {
  return c ? c->circuit.n : -1;
}

long long qgs_circuit_num_gates(const qgs_circuit* c) {
  return c ? static_cast<long long>(c->circuit.gates.size()) : -1;
}

int qgs_run(const qgs_circuit* c, const qgs_run_options* opts,
            qgs_result** out) {
  if (!c || !out) {
    set_error("null argument");
    return QGS_ERR_BADARG;
  }
  *out = nullptr;
  return guarded([&] {
    qgsum::RunOptions options = to_run_options(opts);
    auto* handle =
        new qgs_result{qgsum::run_circuit(c->circuit, options), options};
    *out = handle;
    return QGS_OK;
  });
}

void qgs_result_free(qgs_result* r) { delete r; }

long long qgs_result_num_terms(const qgs_result* r) {
  return r ? static_cast<long long>(r->result.stats.final_terms) : -1;
}

long long qgs_result_peak_terms(const qgs_result* r) {
  return r ? static_cast<long long>(r->result.stats.peak_terms) : -1;
}

long long qgs_result_merge_count(const qgs_result* r) {
  return r ? static_cast<long long>(r->result.stats.merges) : -1;
}

long long qgs_result_cancellation_count(const qgs_result* r) {
  return r ? static_cast<long long>(r->result.stats.cancellations) : -1;
}

int qgs_result_verified(const qgs_result* r) {
  return r ? r->result.stats.verified : -1;
}

char* qgs_result_report_json(const qgs_result* r) {
  if (!r) {
    set_error("null argument");
    return nullptr;
  }
  char* out = nullptr;
  guarded([&] {
    out = dup_string(qgsum::report_json(r->result, r->options));
    return QGS_OK;
  });
  return out;
}

char* qgs_result_report_text(const qgs_result* r) {
  if (!r) {
    set_error("null argument");
    return nullptr;
  }
  char* out = nullptr;
  guarded([&] {
    out = dup_string(qgsum::report_text(r->result, r->options));
    return QGS_OK;
  });
  return out;
}

int qgs_bench(const qgs_bench_options* opts, char** json_out,
              char** text_out) {
  return guarded([&] {
    qgsum::bench::BenchConfig cfg;
    if (opts) {
      if (opts->qubit_counts && opts->num_qubit_counts > 0) {
        cfg.qubit_counts.assign(opts->qubit_counts,
                                opts->qubit_counts + opts->num_qubit_counts);
      }
      if (opts->degrees && opts->num_degrees > 0) {
        cfg.degrees.assign(opts->degrees, opts->degrees + opts->num_degrees);
      }
      if (opts->reps > 0) cfg.reps = opts->reps;
      cfg.seed = opts->seed;
      if (opts->gate) {
        auto g = qgsum::gate_from_name(opts->gate);
        if (!g || !qgsum::gate_is_c3(*g)) {
          set_error("bench gate must be one of T, CS, CH, CCX, CCZ, CSWAP");
          return QGS_ERR_BADARG;
        }
        cfg.gate = *g;
      }
    }
    qgsum::bench::BenchReport report = qgsum::bench::run_bench(cfg);
    if (json_out) *json_out = dup_string(qgsum::bench::bench_json(report));
    if (text_out) *text_out = dup_string(qgsum::bench::bench_text(report));
    return QGS_OK;
  });
}

void qgs_string_free(char* s) { std::free(s); }

}  // extern "C"
