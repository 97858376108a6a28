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

#ifndef MQANNEAL_ANNEAL_HPP_
#define MQANNEAL_ANNEAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mqanneal/qubo.hpp"

namespace mqanneal {

struct BetaSchedule {
  double start = 0.1;
  double end = 10.0;
  bool geometric = true;  // geometric interpolation; false means linear
};

struct AnnealParams {
  std::uint32_t reads = 1000;
  std::uint32_t sweeps = 1000;
  BetaSchedule beta;
  std::uint64_t seed = 0;
  std::uint32_t threads = 1;

  /// Throws ValidationError on zero reads/sweeps or a bad beta range.
  void validate() const;
};

struct SampleRecord {
  Assignment assignment;
  std::int64_t energy = 0;
  std::uint32_t multiplicity = 1;
};

/**
 * Aggregated annealer output: unique assignments with exact energies,
 * sorted by energy and then by assignment.
 */
class SampleSet {
 public:
  SampleSet() = default;
  /// Aggregates duplicates, recomputes nothing; records must carry exact
  /// energies.  Sorts by (energy, assignment).
  explicit SampleSet(std::vector<SampleRecord> records);

  const std::vector<SampleRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  const SampleRecord& best() const;
  /// Total reads represented (sum of multiplicities).
  std::uint64_t total_reads() const;

  /// One JSON object per line: {"assignment": "...", "energy": e,
  /// "multiplicity": k}.
  std::string to_jsonl() const;
  static SampleSet from_jsonl(std::string_view text);

 private:
  std::vector<SampleRecord> records_;
};

/**
 * Single-flip Metropolis simulated annealing.
 *
 * Each read starts from a random assignment and anneals along the beta
 * schedule; one sweep proposes a flip of every variable in index order.
 * Every returned energy is recomputed exactly from the qubo.  Results are
 * a pure function of (qubo, params): each read derives its own generator
 * from (seed, read index), so the thread count never changes the output.
 */
SampleSet sample(const Qubo& q, const AnnealParams& params);

/// Hard cap for exhaustive qubo enumeration.
inline constexpr std::uint32_t kExactGroundVarLimit = 26;

struct GroundResult {
  std::int64_t min_energy = 0;
  /// All minimisers in increasing lexicographic order.
  std::vector<Assignment> minimizers;
};

/**
 * Exact minimum by Gray-code enumeration of all 2^n assignments.
 * Refuses above kExactGroundVarLimit variables with ValidationError.
 */
GroundResult exact_ground(const Qubo& q, unsigned threads = 1);

}  // namespace mqanneal

#endif  // MQANNEAL_ANNEAL_HPP_
