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

#ifndef MQANNEAL_QUBO_HPP_
#define MQANNEAL_QUBO_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mqanneal/nnf.hpp"
#include "mqanneal/rational.hpp"
#include "mqanneal/varrole.hpp"

namespace mqanneal {

/**
 * Quadratic unconstrained binary optimisation problem with integer
 * coefficients:
 *
 *   E(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j
 *
 * Zero coefficients are never stored, so equal problems compare equal.
 */
struct Qubo {
  std::uint32_t n_vars = 0;
  std::int64_t offset = 0;
  std::map<VarId, std::int64_t> linear;
  std::map<std::pair<VarId, VarId>, std::int64_t> quadratic;  // keys i < j

  /// From a polynomial of degree at most 2.  Throws ValidationError on
  /// higher degree or a variable id outside 0..n_vars-1.
  static Qubo from_poly(const IntPoly& f, std::uint32_t n_vars);

  std::int64_t energy(const Assignment& a) const;

  void add_offset(std::int64_t c) { offset += c; }
  void add_linear(VarId i, std::int64_t c);
  /// Accepts (i, j) in either order; i == j is a validation error.
  void add_quadratic(VarId i, VarId j, std::int64_t c);

  /// Term-wise sum; the variable count becomes the larger of the two.
  Qubo& operator+=(const Qubo& other);

  /// Largest |bias| over linear and quadratic terms; offset excluded.
  std::int64_t max_abs_coefficient() const;

  std::size_t term_count() const { return linear.size() + quadratic.size(); }

  friend bool operator==(const Qubo&, const Qubo&) = default;
};

Qubo operator+(Qubo a, const Qubo& b);

/// Values chosen for a subset of variables.
using PartialAssignment = std::map<VarId, std::uint8_t>;

/**
 * A qubo after clamping some variables, with the surviving variables
 * renumbered densely.  kept[new_id] is the original id.
 */
struct ReducedQubo {
  Qubo qubo;
  std::vector<VarId> kept;
};

/**
 * Substitutes fixed values and renumbers the remaining variables.
 *
 * For every completion: energy(original, completion) equals
 * energy(reduced, restriction).  Fixed ids must be in range and distinct
 * (ValidationError otherwise); fixing every variable leaves a constant.
 */
ReducedQubo fix_variables(const Qubo& q, const PartialAssignment& fixed);

/// Rebuilds a full assignment from fixed values plus the reduced point.
Assignment complete_assignment(std::uint32_t n_vars,
                               const PartialAssignment& fixed,
                               const std::vector<VarId>& kept,
                               const Assignment& reduced);

/**
 * Ising form of a qubo under x_i = (1 - s_i) / 2, spins s in {+1, -1}.
 * Coefficients are exact rationals, so the transform is invertible.
 */
struct IsingModel {
  std::uint32_t n_vars = 0;
  Rational offset;
  std::map<VarId, Rational> h;
  std::map<std::pair<VarId, VarId>, Rational> J;  // keys i < j

  /// Energy at a spin configuration; spins[i] must be +1 or -1.
  Rational energy(const std::vector<int>& spins) const;

  friend bool operator==(const IsingModel&, const IsingModel&) = default;
};

IsingModel to_ising(const Qubo& q);
/// Exact inverse for models produced by to_ising; throws ValidationError
/// if some qubo coefficient would not be an integer.
Qubo from_ising(const IsingModel& m);

/**
 * Text format:
 *
 *   qubo <n_vars> <offset>
 *   # role <id> <role>          optional, one line per variable
 *   <i> <i> <c>                 linear bias
 *   <i> <j> <c>                 quadratic bias, i < j
 *
 * Ids are 0-based.  Lines are sorted, so serialisation is canonical.
 * Unknown comment lines are ignored on input.
 */
std::string write_qubo(const Qubo& q, const VarRegistry* roles = nullptr);

struct QuboFile {
  Qubo qubo;
  VarRegistry roles;  // empty when the file carries no role lines
};

QuboFile read_qubo(std::string_view text);

/// JSON object with the same content as the text format.
std::string qubo_to_json(const Qubo& q, const VarRegistry* roles = nullptr);
QuboFile qubo_from_json(std::string_view text);

}  // namespace mqanneal

#endif  // MQANNEAL_QUBO_HPP_
