// Copyright 2026 The mqanneal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MQANNEAL_VARROLE_HPP_
#define MQANNEAL_VARROLE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mqanneal {

enum class RoleKind : std::uint8_t {
  kOriginal,    // a variable of the input system
  kPair,        // product of two originals, payload (i, j)
  kChain,       // carries a partial XOR, payload (equation, position)
  kReduction,   // quadratization ancilla, payload: the replaced pair (i, j)
  kGate,        // internal gate ancilla, payload: global gate index
  kOutput,      // circuit wire, payload (equation, step)
};

/// What a qubo variable stands for; useful when decoding samples.
struct VarRole {
  RoleKind kind = RoleKind::kOriginal;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static VarRole original() { return {RoleKind::kOriginal, 0, 0}; }
  static VarRole pair(std::uint32_t i, std::uint32_t j) {
    return {RoleKind::kPair, i, j};
  }
  static VarRole chain(std::uint32_t eq, std::uint32_t pos) {
    return {RoleKind::kChain, eq, pos};
  }
  static VarRole reduction(std::uint32_t i, std::uint32_t j) {
    return {RoleKind::kReduction, i, j};
  }
  static VarRole gate(std::uint32_t gate_index) {
    return {RoleKind::kGate, gate_index, 0};
  }
  static VarRole output(std::uint32_t eq, std::uint32_t step) {
    return {RoleKind::kOutput, eq, step};
  }

  /// Role as written in qubo files, e.g. "original" or "pair 1 3".
  std::string to_string() const;
  /// Parses to_string output.  Throws ValidationError on anything else.
  static VarRole parse(std::string_view text);

  friend bool operator==(const VarRole&, const VarRole&) = default;
};

/// Role of every variable, indexed by variable id.
using VarRegistry = std::vector<VarRole>;

}  // namespace mqanneal

#endif  // MQANNEAL_VARROLE_HPP_
