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

#include "qgsum/gates.hpp"

#include <array>
#include <utility>

namespace qgsum {

namespace {
constexpr std::array<std::pair<std::string_view, Gate>, 15> kGates = {{
    {"X", Gate::X},
    {"Y", Gate::Y},
    {"Z", Gate::Z},
    {"H", Gate::H},
    {"S", Gate::S},
    {"SDG", Gate::SDG},
    {"CX", Gate::CX},
    {"CZ", Gate::CZ},
    {"SWAP", Gate::SWAP},
    {"T", Gate::T},
    {"CS", Gate::CS},
    {"CH", Gate::CH},
    {"CCX", Gate::CCX},
    {"CCZ", Gate::CCZ},
    {"CSWAP", Gate::CSWAP},
}};
}  // namespace

int gate_arity(Gate g) {
  switch (g) {
    case Gate::X:
    case Gate::Y:
    case Gate::Z:
    case Gate::H:
    case Gate::S:
    case Gate::SDG:
    case Gate::T:
      return 1;
    case Gate::CX:
    case Gate::CZ:
    case Gate::SWAP:
    case Gate::CS:
    case Gate::CH:
      return 2;
    case Gate::CCX:
    case Gate::CCZ:
    case Gate::CSWAP:
      return 3;
  }
  return 0;
}

bool gate_is_c3(Gate g) {
  switch (g) {
    case Gate::T:
    case Gate::CS:
    case Gate::CH:
    case Gate::CCX:
    case Gate::CCZ:
    case Gate::CSWAP:
      return true;
    default:
      return false;
  }
}

const char* gate_name(Gate g) {
  for (const auto& [name, gate] : kGates) {
    if (gate == g) return name.data();
  }
  return "?";
}

std::optional<Gate> gate_from_name(std::string_view name) {
  for (const auto& [n, gate] : kGates) {
    if (n == name) return gate;
  }
  return std::nullopt;
}

}  // namespace qgsum
