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

#ifndef QGSUM_CIRCUIT_HPP
#define QGSUM_CIRCUIT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgsum/gates.hpp"

namespace qgsum {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct GateOp {
  Gate gate;
  std::vector<int> operands;  // 0-based
  int line = 0;               // source line, for error reporting
};

struct Circuit {
  int n = 0;
  bool init_plus = false;  // default initial state is |0...0>
  std::vector<GateOp> gates;
};

// Grammar: '#' starts a comment; the first directive must be `qubits N`;
// an optional `init plus|zero` follows; gate lines are `NAME q1 [q2 [q3]]`
// with whitespace-separated 1-based operands.
Circuit parse_circuit(std::string_view text);

// Canonical echo of a circuit in the same grammar.
std::string circuit_to_text(const Circuit& c);

}  // namespace qgsum

#endif  // QGSUM_CIRCUIT_HPP
