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

#ifndef MQANNEAL_ITERFIX_HPP_
#define MQANNEAL_ITERFIX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mqanneal/anneal.hpp"
#include "mqanneal/embed.hpp"

namespace mqanneal {

struct IterParams {
  std::uint32_t consensus_count = 10;  // sample window for unanimity
  std::uint32_t max_iterations = 10;
  std::uint32_t min_fix_per_round = 1;
  /// Non-improving iterations tolerated before declaring exclusion.
  std::uint32_t patience = 3;
  AnnealParams anneal;

  void validate() const;
};

enum class IterStatus {
  kSolved,     // a verified solution was reached
  kExcluded,   // fixing locked out every remaining ground state
  kExhausted,  // iteration or consensus budget ran out
};

std::string to_string(IterStatus status);

/// Multiplicity-weighted energy quantiles of a sample set.
struct EnergyQuantiles {
  std::int64_t min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

EnergyQuantiles energy_quantiles(const SampleSet& ss);

struct IterationRecord {
  std::uint32_t iteration = 0;  // 1-based
  std::uint32_t free_vars = 0;  // size of the sampled qubo
  std::int64_t best_energy = 0;  // best completed energy, original terms
  EnergyQuantiles energies;
  std::uint32_t consensus_window = 0;
  /// Variables fixed this round, in original qubo ids.
  std::vector<std::pair<VarId, std::uint8_t>> newly_fixed;
  bool backtracked = false;
  std::uint32_t fixed_total = 0;  // after this round
};

struct IterTrace {
  IterStatus status = IterStatus::kExhausted;
  /// Solution over the original system variables, present when solved.
  std::optional<Assignment> solution;
  std::vector<IterationRecord> iterations;
};

std::string trace_to_json(const IterTrace& trace);

/**
 * Values shared by the lowest-energy samples.
 *
 * Looks at the first `window` records (rarer assignments first by energy),
 * widened to include every record tied with the last one, and returns the
 * variables on which all of them agree.  Variables present in
 * already_fixed are skipped.  The sample set must not be empty.
 */
PartialAssignment consensus_fix(const SampleSet& ss, std::uint32_t window,
                                const PartialAssignment& already_fixed);

/**
 * Whether the fixed values provably exclude the reference optimum:
 * true when fixed is nonempty and the best completion found of the fixed
 * subspace sits strictly above reference_best.  With an exact subspace
 * optimum this is a proof; with a sampled one it is evidence, which
 * iterate() tempers with a patience counter.
 */
bool exclusion_check(const Qubo& original, const PartialAssignment& fixed,
                     const Assignment& completed_best,
                     std::int64_t reference_best);

/**
 * Iterative solve-and-fix loop over an embedding.
 *
 * Each round anneals the reduced qubo, checks for a ground state, then
 * fixes the consensus variables of the best samples.  A round that fixes
 * fewer than min_fix_per_round variables halves the consensus window
 * (down to 2, then the search is exhausted).  When the completed best
 * energy stays above the best ever seen for `patience` rounds, the last
 * batch of fixes is undone and the window doubled; with nothing left to
 * undo the trace ends as excluded.
 *
 * A solved status is verified: against eval_system when `system` is given
 * (the solution field is then the projection to original variables), and
 * against the embedding ground energy otherwise.
 */
IterTrace iterate(const Embedding& emb, const IterParams& params,
                  const MQSystem* system = nullptr);

}  // namespace mqanneal

#endif  // MQANNEAL_ITERFIX_HPP_
