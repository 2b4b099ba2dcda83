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

#ifndef QGSUM_GATES_HPP
#define QGSUM_GATES_HPP

#include <optional>
#include <string_view>

namespace qgsum {

enum class Gate {
  X,
  Y,
  Z,
  H,
  S,
  SDG,
  CX,
  CZ,
  SWAP,
  T,
  CS,
  CH,
  CCX,
  CCZ,
  CSWAP,
};

int gate_arity(Gate g);
// True for the supported third-level gates {T, CS, CH, CCX, CCZ, CSWAP};
// everything else in the set is Clifford.
bool gate_is_c3(Gate g);
const char* gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);

}  // namespace qgsum

#endif  // QGSUM_GATES_HPP
