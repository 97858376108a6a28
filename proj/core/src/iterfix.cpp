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

#include "mqanneal/iterfix.hpp"

#include <algorithm>

#include "json.hpp"

namespace mqanneal {

void IterParams::validate() const {
  if (consensus_count == 0)
    throw ValidationError("consensus window must be at least 1");
  if (max_iterations == 0)
    throw ValidationError("need at least one iteration");
  if (min_fix_per_round == 0)
    throw ValidationError("min_fix_per_round must be at least 1");
  anneal.validate();
}

std::string to_string(IterStatus status) {
  switch (status) {
    case IterStatus::kSolved:
      return "solved";
    case IterStatus::kExcluded:
      return "excluded";
    case IterStatus::kExhausted:
      return "exhausted";
  }
  throw ValidationError("unknown iteration status");
}

EnergyQuantiles energy_quantiles(const SampleSet& ss) {
  if (ss.empty()) throw ValidationError("sample set is empty");
  const auto& records = ss.records();
  const std::uint64_t total = ss.total_reads();
  auto at = [&records, total](double frac) {
    const std::uint64_t target =
        static_cast<std::uint64_t>(frac * static_cast<double>(total - 1));
    std::uint64_t seen = 0;
    for (const auto& r : records) {
      seen += r.multiplicity;
      if (target < seen) return r.energy;
    }
    return records.back().energy;
  };
  EnergyQuantiles q;
  q.min = records.front().energy;
  q.max = records.back().energy;
  q.q1 = at(0.25);
  q.median = at(0.5);
  q.q3 = at(0.75);
  return q;
}

PartialAssignment consensus_fix(const SampleSet& ss, std::uint32_t window,
                                const PartialAssignment& already_fixed) {
  if (ss.empty()) throw ValidationError("sample set is empty");
  if (window == 0) throw ValidationError("window must be at least 1");
  const auto& records = ss.records();
  std::size_t count = std::min<std::size_t>(window, records.size());
  // Widen over ties with the last included energy.
  while (count < records.size() &&
         records[count].energy == records[count - 1].energy)
    ++count;

  const std::size_t n = records.front().assignment.size();
  PartialAssignment fixed;
  for (std::size_t v = 0; v < n; ++v) {
    if (already_fixed.count(static_cast<VarId>(v))) continue;
    const std::uint8_t value = records[0].assignment[v];
    bool unanimous = true;
    for (std::size_t r = 1; r < count && unanimous; ++r)
      unanimous = records[r].assignment[v] == value;
    if (unanimous) fixed[static_cast<VarId>(v)] = value;
  }
  return fixed;
}

bool exclusion_check(const Qubo& original, const PartialAssignment& fixed,
                     const Assignment& completed_best,
                     std::int64_t reference_best) {
  if (fixed.empty()) return false;
  for (const auto& [i, v] : fixed)
    if (completed_best[i] != v)
      throw ValidationError("completion disagrees with the fixed values");
  return original.energy(completed_best) > reference_best;
}

namespace {

std::uint64_t mix_iteration_seed(std::uint64_t seed, std::uint64_t round) {
  std::uint64_t z = seed ^ (0xd1b54a32d192ed03ull * (round + 1));
  z = (z ^ (z >> 29)) * 0xff51afd7ed558ccdull;
  z = (z ^ (z >> 32)) * 0xc4ceb9fe1a85ec53ull;
  return z ^ (z >> 32);
}

}  // namespace

IterTrace iterate(const Embedding& emb, const IterParams& params,
                  const MQSystem* system) {
  params.validate();
  if (system && system->n_vars != emb.n_original)
    throw ValidationError("system does not match the embedding");

  const Qubo& original = emb.qubo;
  IterTrace trace;
  PartialAssignment fixed;
  std::vector<PartialAssignment> batches;
  std::uint32_t window = params.consensus_count;
  std::int64_t best_ever = 0;
  bool have_best = false;
  std::uint32_t non_improving = 0;

  for (std::uint32_t it = 1; it <= params.max_iterations; ++it) {
    const ReducedQubo red = fix_variables(original, fixed);
    AnnealParams ap = params.anneal;
    ap.seed = mix_iteration_seed(params.anneal.seed, it);
    const SampleSet ss = sample(red.qubo, ap);

    const SampleRecord& best = ss.best();
    const Assignment completed = complete_assignment(
        original.n_vars, fixed, red.kept, best.assignment);
    const std::int64_t energy = original.energy(completed);
    if (energy != best.energy)
      throw std::logic_error("reduced energy bookkeeping drifted");

    IterationRecord rec;
    rec.iteration = it;
    rec.free_vars = red.qubo.n_vars;
    rec.best_energy = energy;
    rec.energies = energy_quantiles(ss);
    rec.consensus_window = window;
    rec.fixed_total = static_cast<std::uint32_t>(fixed.size());

    if (!have_best || energy < best_ever) {
      best_ever = energy;
      have_best = true;
      non_improving = 0;
    } else if (energy > best_ever) {
      ++non_improving;
    } else {
      non_improving = 0;
    }

    if (energy == emb.ground_energy) {
      const Assignment projected = emb.project(completed);
      if (system && !is_solution(*system, projected))
        throw std::logic_error(
            "zero-energy assignment fails system verification");
      trace.status = IterStatus::kSolved;
      trace.solution = projected;
      trace.iterations.push_back(std::move(rec));
      return trace;
    }

    if (non_improving >= params.patience &&
        exclusion_check(original, fixed, completed, best_ever)) {
      if (batches.empty()) {
        trace.status = IterStatus::kExcluded;
        trace.iterations.push_back(std::move(rec));
        return trace;
      }
      for (const auto& kv : batches.back()) fixed.erase(kv.first);
      batches.pop_back();
      window = std::min<std::uint32_t>(window * 2, 1u << 20);
      non_improving = 0;
      rec.backtracked = true;
      rec.fixed_total = static_cast<std::uint32_t>(fixed.size());
      trace.iterations.push_back(std::move(rec));
      continue;
    }

    PartialAssignment reduced_fix = consensus_fix(ss, window, {});
    PartialAssignment batch;
    for (const auto& [rv, value] : reduced_fix)
      batch[red.kept[rv]] = value;

    if (batch.size() >= params.min_fix_per_round) {
      for (const auto& [v, value] : batch) {
        fixed[v] = value;
        rec.newly_fixed.push_back({v, value});
      }
      batches.push_back(std::move(batch));
      rec.fixed_total = static_cast<std::uint32_t>(fixed.size());
    } else if (window > 2) {
      window = std::max<std::uint32_t>(2, window / 2);
    } else {
      trace.status = IterStatus::kExhausted;
      trace.iterations.push_back(std::move(rec));
      return trace;
    }
    trace.iterations.push_back(std::move(rec));
  }

  trace.status = IterStatus::kExhausted;
  return trace;
}

std::string trace_to_json(const IterTrace& trace) {
  nlohmann::json j;
  j["status"] = to_string(trace.status);
  if (trace.solution) j["solution"] = trace.solution->to_string();
  j["iterations"] = nlohmann::json::array();
  for (const auto& rec : trace.iterations) {
    nlohmann::json r;
    r["iteration"] = rec.iteration;
    r["free_vars"] = rec.free_vars;
    r["best_energy"] = rec.best_energy;
    r["energies"] = {{"min", rec.energies.min},
                     {"q1", rec.energies.q1},
                     {"median", rec.energies.median},
                     {"q3", rec.energies.q3},
                     {"max", rec.energies.max}};
    r["consensus_window"] = rec.consensus_window;
    r["newly_fixed"] = nlohmann::json::object();
    for (const auto& [v, value] : rec.newly_fixed)
      r["newly_fixed"][std::to_string(v)] = value;
    r["backtracked"] = rec.backtracked;
    r["fixed_total"] = rec.fixed_total;
    j["iterations"].push_back(std::move(r));
  }
  return j.dump(2);
}

}  // namespace mqanneal
