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

#include "mqanneal/varrole.hpp"

#include <sstream>

#include "mqanneal/errors.hpp"

namespace mqanneal {

std::string VarRole::to_string() const {
  switch (kind) {
    case RoleKind::kOriginal:
      return "original";
    case RoleKind::kPair:
      return "pair " + std::to_string(a) + " " + std::to_string(b);
    case RoleKind::kChain:
      return "chain " + std::to_string(a) + " " + std::to_string(b);
    case RoleKind::kReduction:
      return "reduction " + std::to_string(a) + " " + std::to_string(b);
    case RoleKind::kGate:
      return "gate " + std::to_string(a);
    case RoleKind::kOutput:
      return "output " + std::to_string(a) + " " + std::to_string(b);
  }
  throw ValidationError("unknown role kind");
}

VarRole VarRole::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name;
  in >> name;
  auto two = [&in, &name](RoleKind kind) {
    long long a = -1, b = -1;
    std::string rest;
    if (!(in >> a >> b) || a < 0 || b < 0 || (in >> rest))
      throw ValidationError("role '" + name + "' needs two indices");
    return VarRole{kind, static_cast<std::uint32_t>(a),
                   static_cast<std::uint32_t>(b)};
  };
  if (name == "original") {
    std::string rest;
    if (in >> rest) throw ValidationError("role 'original' takes no payload");
    return VarRole::original();
  }
  if (name == "pair") return two(RoleKind::kPair);
  if (name == "chain") return two(RoleKind::kChain);
  if (name == "reduction") return two(RoleKind::kReduction);
  if (name == "output") return two(RoleKind::kOutput);
  if (name == "gate") {
    long long g = -1;
    std::string rest;
    if (!(in >> g) || g < 0 || (in >> rest))
      throw ValidationError("role 'gate' needs one index");
    return VarRole::gate(static_cast<std::uint32_t>(g));
  }
  throw ValidationError("unknown role '" + name + "'");
}

}  // namespace mqanneal
