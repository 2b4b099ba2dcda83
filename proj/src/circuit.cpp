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

#include "qgsum/circuit.hpp"

#include <charconv>
#include <sstream>

namespace qgsum {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool saw_qubits = false;
  bool saw_gate = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++lineno;

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "qubits") {
      if (saw_qubits) throw ParseError(lineno, "duplicate qubits directive");
      if (tokens.size() != 2) {
        throw ParseError(lineno, "usage: qubits N");
      }
      circuit.n = parse_int(tokens[1], lineno, "a qubit count");
      if (circuit.n < 1) throw ParseError(lineno, "qubit count must be >= 1");
      saw_qubits = true;
      continue;
    }
    if (!saw_qubits) {
      throw ParseError(lineno, "first directive must be `qubits N`");
    }
    if (tokens[0] == "init") {
      if (saw_gate) {
        throw ParseError(lineno, "init must precede all gates");
      }
      if (tokens.size() != 2 || (tokens[1] != "plus" && tokens[1] != "zero")) {
        throw ParseError(lineno, "usage: init plus|zero");
      }
      circuit.init_plus = tokens[1] == "plus";
      continue;
    }

    std::optional<Gate> gate = gate_from_name(tokens[0]);
    if (!gate) {
      throw ParseError(lineno,
                       "unknown gate '" + std::string(tokens[0]) + "'");
    }
    int arity = gate_arity(*gate);
    if (static_cast<int>(tokens.size()) - 1 != arity) {
      throw ParseError(lineno, std::string(tokens[0]) + " takes " +
                                   std::to_string(arity) + " operand(s)");
    }
    GateOp op;
    op.gate = *gate;
    op.line = lineno;
    for (int i = 1; i <= arity; ++i) {
      int q = parse_int(tokens[i], lineno, "a qubit index");
      if (q < 1 || q > circuit.n) {
        throw ParseError(lineno, "operand " + std::to_string(q) +
                                     " out of range 1.." +
                                     std::to_string(circuit.n));
      }
      for (int prev : op.operands) {
        if (prev == q - 1) {
          throw ParseError(lineno, "repeated operand " + std::to_string(q));
        }
      }
      op.operands.push_back(q - 1);
    }
    circuit.gates.push_back(std::move(op));
    saw_gate = true;
  }
  if (!saw_qubits) throw ParseError(1, "missing `qubits N` directive");
  return circuit;
}

std::string circuit_to_text(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n << "\n";
  out << "init " << (c.init_plus ? "plus" : "zero") << "\n";
  for (const GateOp& op : c.gates) {
    out << gate_name(op.gate);
    for (int q : op.operands) out << ' ' << q + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace qgsum
