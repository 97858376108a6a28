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

#ifndef MQANNEAL_EMBED_HPP_
#define MQANNEAL_EMBED_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mqanneal/anf.hpp"
#include "mqanneal/qubo.hpp"
#include "mqanneal/quadratize.hpp"
#include "mqanneal/rational.hpp"
#include "mqanneal/varrole.hpp"

namespace mqanneal {

enum class EmbedMethod { kDirect, kTruncated, kPenalty };

std::string to_string(EmbedMethod m);
EmbedMethod embed_method_from_string(std::string_view name);

/**
 * One additive piece of an embedding.
 *
 * Parts sum to the embedding qubo.  For the truncated and penalty methods
 * every part is pointwise nonnegative, and each part's `fresh` variables
 * are the ones it introduces: processing parts in order and choosing
 * fresh values that zero each part reconstructs every zero-energy state.
 */
struct EmbedPart {
  std::string label;
  Qubo sub;                    // over the full embedding variable space
  std::vector<VarId> support;  // variables with a nonzero term, sorted
  std::vector<VarId> fresh;    // variables introduced by this part
};

/**
 * A two-body Hamiltonian whose zero-energy states encode the solutions of
 * a Boolean system.  The minimum is ground_energy (always 0) exactly when
 * the system is satisfiable, and every zero-energy assignment restricts to
 * a solution on the first n_original variables.
 */
struct Embedding {
  EmbedMethod method = EmbedMethod::kDirect;
  Qubo qubo;
  VarRegistry roles;  // size == qubo.n_vars
  std::uint32_t n_original = 0;
  std::int64_t ground_energy = 0;
  std::vector<EmbedPart> parts;

  std::uint32_t total_vars() const { return qubo.n_vars; }

  /// Restriction of an extended assignment to the original variables.
  Assignment project(const Assignment& extended) const;

  /**
   * Completes an original assignment with part-wise minimising ancilla
   * values (processed in part order, ties to the smallest pattern).  For
   * a solution of the system this reaches energy 0.
   */
  Assignment extend(const Assignment& original) const;
};

struct DirectOptions {
  PenaltyWeighting weighting = PenaltyWeighting::kDelta;
  std::size_t nnf_term_cap = kDefaultNnfTermCap;
};

/**
 * Sum of the integer forms of all equations, quadratized in one pass so
 * product ancillas are shared across equations.  At any assignment whose
 * ancillas are consistent, the energy counts violated equations.
 */
Embedding embed_direct(const MQSystem& s, const DirectOptions& opts = {});

/**
 * Splits every equation into XOR blocks of at most k variables linked by
 * chain ancillas, after replacing quadratic monomials with shared product
 * ancillas; each block is converted and quadratized on its own.  Keeps
 * coefficients bounded by a function of k instead of the equation length.
 */
Embedding embed_truncated(const MQSystem& s, std::uint32_t k = 4);

/**
 * Circuit-style embedding: every equation becomes a cascade of reversible
 * gate penalties (NOT for the constant, CNOT per linear term, Toffoli per
 * quadratic term) accumulating into an output wire that is penalised at
 * both ends.  All coefficients stay in a fixed small range.
 */
Embedding embed_penalty(const MQSystem& s);

/// Penalty for z = NOT x: zero iff z = 1 - x, at least 1 otherwise.
IntPoly not_gate_penalty(VarId x, VarId out);

/**
 * Penalty for out = target XOR control, minimised over one ancilla:
 *
 *   2ct - 2(c + t)z - 4(c + t)a + 4za + c + t + z + 4a
 *
 * At consistent rows the minimum over the ancilla is 0 and is attained at
 * exactly one ancilla value; otherwise the minimum is at least 1.
 */
IntPoly cnot_gate_penalty(VarId control, VarId target, VarId out,
                          VarId ancilla);

/**
 * Penalty for out = target XOR (c1 AND c2), minimised over two ancillas.
 * Composes the product penalty (and_ancilla = c1 c2) with the CNOT
 * penalty on (and_ancilla, target, out, cnot_ancilla); the same zero/one
 * separation and unique minimising ancilla row hold.
 */
IntPoly toffoli_gate_penalty(VarId c1, VarId c2, VarId target, VarId out,
                             VarId cnot_ancilla, VarId and_ancilla);

/**
 * How an XOR of t terms is cut into blocks of at most k variables.
 * consumed[c] original terms go into block c; sizes[c] counts the block's
 * variables including the chain links shared with its neighbours.
 */
struct ChunkPlan {
  std::vector<std::uint32_t> consumed;
  std::vector<std::uint32_t> sizes;
  std::uint32_t chain_count() const {
    return consumed.empty() ? 0
                            : static_cast<std::uint32_t>(consumed.size()) - 1;
  }
};

/// Requires k >= 3 and t >= 1.
ChunkPlan plan_chunks(std::uint32_t t, std::uint32_t k);

/// Ancillas the greedy reduction needs for a full s-variable XOR block:
/// 0 for s <= 2, 2^((s+2)/2) - 2 - s for even s, 3*2^((s-1)/2) - 2 - s odd.
std::int64_t reduction_ancilla_bound(std::uint32_t s);

/// Worst-case logical qubits of the direct embedding of an n-variable
/// system: 2^((n+2)/2) - 2 for even n, 3*2^((n-1)/2) - 2 for odd.  n >= 2.
std::int64_t estimate_direct_qubits(std::uint32_t n);

/**
 * Closed-form logical qubit count of the truncated embedding:
 *
 *   sum_i [ (n_i-2)/(k-2) * A(k) + (n_i-k)/(k-2) ] + n(n-1)/2 + n
 *
 * with A(k) = reduction_ancilla_bound(k).  Term counts may be fractional
 * (average-case analysis); no ceilings are applied.
 */
Rational truncated_qubit_formula(std::uint32_t n,
                                 std::span<const Rational> term_counts,
                                 std::uint32_t k);

/// k = 4 special case, n^2/2 + n/2 - 4m + (3/2) sum n_i; equal to the
/// general formula at k = 4.
Rational truncated_k4_formula(std::uint32_t n, std::uint32_t m,
                              std::span<const Rational> term_counts);

/**
 * Integer companion of the formula that mirrors the builder's chunking,
 * with ceilings and the full n(n-1)/2 product-ancilla budget.  An upper
 * bound on what embed_truncated allocates (equations whose block absorbs
 * the constant term can come in below it).
 */
std::int64_t truncated_builder_prediction(
    std::uint32_t n, std::span<const std::int64_t> term_counts,
    std::uint32_t k);

struct TruncatedEstimate {
  Rational formula;
  std::int64_t prediction = 0;
};

/// Both estimates for a concrete system, using its equation term counts.
TruncatedEstimate estimate_truncated_qubits(const MQSystem& s,
                                            std::uint32_t k);

/**
 * Average-case qubit scaling of the truncated embedding at k = 4, from
 * substituting m = n and n_i = (n + n^2)/4 into the closed form.
 *
 * exact is (3/8)n^3 + (7/8)n^2 - (7/2)n.  nominal is the commonly quoted
 * cubic (3/8)n^3 + (7/8)n^2 - (7/8)n, whose linear coefficient does not
 * follow from the substitution; both are reported so the difference stays
 * visible.
 */
struct AverageScaling {
  Rational exact;
  Rational nominal;
  bool nominal_matches_exact = false;
};

AverageScaling average_scaling(std::uint32_t n);

struct ScalingEntry {
  std::uint32_t n = 0;
  EmbedMethod method = EmbedMethod::kDirect;
  std::uint32_t k = 0;  // 0 for direct
  Rational qubits;
};

struct ScalingReport {
  std::vector<ScalingEntry> entries;  // one row per (n, method/k)
  std::map<std::uint32_t, std::uint32_t> best_k;  // per n, ties to smaller k
  std::string note;
};

/**
 * Direct worst-case counts against average-case truncated counts for every
 * k in [k_min, k_max].  The note records the exact/nominal average-scaling
 * discrepancy.  Requires 2 <= n_min <= n_max and 3 <= k_min <= k_max.
 */
ScalingReport scaling_report(std::uint32_t n_min, std::uint32_t n_max,
                             std::uint32_t k_min, std::uint32_t k_max);

std::string scaling_report_tsv(const ScalingReport& report);
std::string scaling_report_json(const ScalingReport& report);

}  // namespace mqanneal

#endif  // MQANNEAL_EMBED_HPP_
