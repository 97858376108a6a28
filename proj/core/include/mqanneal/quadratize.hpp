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

#ifndef MQANNEAL_QUADRATIZE_HPP_
#define MQANNEAL_QUADRATIZE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mqanneal/nnf.hpp"

namespace mqanneal {

/**
 * How substitution penalties are weighted.
 *
 * kPerTerm scales the penalty by sum(1 + |alpha|) over the substituted
 * monomials; kDelta uses 1 + max(sum of positive alpha, sum of negative
 * magnitudes), which keeps coefficients smaller.  Both preserve the ground
 * state exactly, and any minimum of the output has consistent ancillas.
 */
enum class PenaltyWeighting { kPerTerm, kDelta };

/// Which variable pairs were replaced, and by which ancilla.
struct AncillaMap {
  std::map<std::pair<VarId, VarId>, VarId> pairs;  // key (i, j), i < j
};

/**
 * The standard product constraint on x_ij = x_i x_j:
 *
 *   s = 3 x_ij + x_i x_j - 2 x_i x_ij - 2 x_j x_ij
 *
 * Zero exactly when x_ij equals x_i x_j, at least 1 otherwise.
 */
IntPoly pair_penalty(VarId i, VarId j, VarId ancilla);

/// One substitution performed by reduce_to_quadratic.
struct SubstitutionRecord {
  VarId i, j;          // replaced pair, i < j
  VarId ancilla;
  std::int64_t weight; // penalty scale applied
  IntPoly penalty;     // weight * pair_penalty(i, j, ancilla)
};

struct QuadratizeResult {
  IntPoly poly;    // degree at most 2; equals input plus weighted penalties
  AncillaMap ancillas;
  std::vector<SubstitutionRecord> substitutions;  // in allocation order
  VarId var_span = 0;  // 1 + largest id, ancillas included
};

/**
 * Rewrites f into a quadratic polynomial with penalised product ancillas.
 *
 * Repeatedly picks the pair occurring in the most monomials of degree 3 or
 * higher (ties broken by smallest pair), replaces it with a fresh ancilla
 * in those monomials, and adds the weighted product penalty.  Quadratic
 * occurrences of a pair are already two-body and stay in place.  Over the
 * original variables, min over ancilla completions of the output equals f,
 * and the minimisers agree after projection.
 *
 * Ancilla ids start at first_ancilla (default: f.var_span()), so callers
 * embedding several polynomials can keep id spaces disjoint.
 */
QuadratizeResult reduce_to_quadratic(
    const IntPoly& f, PenaltyWeighting mode = PenaltyWeighting::kDelta,
    std::optional<VarId> first_ancilla = std::nullopt);

/// Largest |coefficient| over linear and higher terms (constant excluded).
std::int64_t max_abs_coefficient(const IntPoly& f);

}  // namespace mqanneal

#endif  // MQANNEAL_QUADRATIZE_HPP_
