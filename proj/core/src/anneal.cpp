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

#include "mqanneal/anneal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "json.hpp"

namespace mqanneal {

void AnnealParams::validate() const {
  if (reads == 0) throw ValidationError("reads must be at least 1");
  if (sweeps == 0) throw ValidationError("sweeps must be at least 1");
  if (!(beta.start > 0) || !(beta.end > 0))
    throw ValidationError("beta endpoints must be positive");
  if (beta.end < beta.start)
    throw ValidationError("beta must not decrease");
  if (threads == 0) throw ValidationError("threads must be at least 1");
}

SampleSet::SampleSet(std::vector<SampleRecord> records) {
  std::map<Assignment, std::pair<std::int64_t, std::uint64_t>> agg;
  for (auto& r : records) {
    auto [it, inserted] =
        agg.try_emplace(std::move(r.assignment), r.energy, r.multiplicity);
    if (!inserted) {
      if (it->second.first != r.energy)
        throw ValidationError("conflicting energies for one assignment");
      it->second.second += r.multiplicity;
    }
  }
  records_.reserve(agg.size());
  for (auto& [a, ec] : agg)
    records_.push_back(SampleRecord{
        a, ec.first, static_cast<std::uint32_t>(ec.second)});
  std::stable_sort(records_.begin(), records_.end(),
                   [](const SampleRecord& x, const SampleRecord& y) {
                     if (x.energy != y.energy) return x.energy < y.energy;
                     return x.assignment < y.assignment;
                   });
}

const SampleRecord& SampleSet::best() const {
  if (records_.empty()) throw ValidationError("sample set is empty");
  return records_.front();
}

std::uint64_t SampleSet::total_reads() const {
  std::uint64_t total = 0;
  for (const auto& r : records_) total += r.multiplicity;
  return total;
}

std::string SampleSet::to_jsonl() const {
  std::string out;
  for (const auto& r : records_) {
    nlohmann::json j;
    j["assignment"] = r.assignment.to_string();
    j["energy"] = r.energy;
    j["multiplicity"] = r.multiplicity;
    out += j.dump();
    out += "\n";
  }
  return out;
}

SampleSet SampleSet::from_jsonl(std::string_view text) {
  std::vector<SampleRecord> records;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty()) {
      try {
        auto j = nlohmann::json::parse(line);
        SampleRecord r;
        r.assignment =
            Assignment::from_string(j.at("assignment").get<std::string>());
        r.energy = j.at("energy").get<std::int64_t>();
        r.multiplicity = j.at("multiplicity").get<std::uint32_t>();
        records.push_back(std::move(r));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return SampleSet(std::move(records));
}

namespace {

// Mixes a seed and a read index into an engine seed; raw engine output is
// used everywhere so results do not depend on the standard library.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t read) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (read + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Adjacency {
  std::vector<std::int64_t> linear;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> neighbors;

  explicit Adjacency(const Qubo& q) {
    linear.assign(q.n_vars, 0);
    neighbors.assign(q.n_vars, {});
    for (const auto& [i, c] : q.linear) linear[i] = c;
    for (const auto& [ij, c] : q.quadratic) {
      neighbors[ij.first].push_back({ij.second, c});
      neighbors[ij.second].push_back({ij.first, c});
    }
  }

  // Energy change if bits[v] flips.
  std::int64_t delta(const std::vector<std::uint8_t>& bits,
                     std::uint32_t v) const {
    std::int64_t field = linear[v];
    for (const auto& [u, c] : neighbors[v])
      if (bits[u]) field += c;
    return bits[v] ? -field : field;
  }
};

std::vector<double> beta_schedule(const AnnealParams& params) {
  std::vector<double> betas(params.sweeps);
  const double denom =
      params.sweeps > 1 ? static_cast<double>(params.sweeps - 1) : 1.0;
  for (std::uint32_t t = 0; t < params.sweeps; ++t) {
    const double frac = static_cast<double>(t) / denom;
    betas[t] = params.beta.geometric
                   ? params.beta.start *
                         std::pow(params.beta.end / params.beta.start, frac)
                   : params.beta.start +
                         (params.beta.end - params.beta.start) * frac;
  }
  return betas;
}

Assignment run_read(const Qubo& q, const Adjacency& adj,
                    const std::vector<double>& betas, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(q.n_vars);
  for (auto& b : bits) b = rng() & 1;

  Assignment current{bits};
  std::int64_t energy = q.energy(current);
  std::vector<std::uint8_t> best_bits = current.bits();
  std::int64_t best_energy = energy;
  std::vector<std::uint8_t> work = current.bits();

  for (double beta : betas) {
    for (std::uint32_t v = 0; v < q.n_vars; ++v) {
      const std::int64_t de = adj.delta(work, v);
      bool accept = de <= 0;
      if (!accept)
        accept = uniform01(rng) <
                 std::exp(-beta * static_cast<double>(de));
      if (accept) {
        work[v] ^= 1;
        energy += de;
        if (energy < best_energy) {
          best_energy = energy;
          best_bits = work;
        }
      }
    }
    // Exactness audit: the incremental energy must match a full
    // recomputation at every sweep boundary.
    const std::int64_t audit = q.energy(Assignment{work});
    if (audit != energy)
      throw std::logic_error("incremental energy drifted from exact value");
  }
  return Assignment{std::move(best_bits)};
}

}  // namespace

SampleSet sample(const Qubo& q, const AnnealParams& params) {
  params.validate();

  if (q.n_vars == 0) {
    SampleRecord r;
    r.assignment = Assignment{};
    r.energy = q.offset;
    r.multiplicity = params.reads;
    return SampleSet({std::move(r)});
  }

  const Adjacency adj(q);
  const std::vector<double> betas = beta_schedule(params);
  std::vector<Assignment> winners(params.reads);

  auto run_range = [&](std::uint32_t read) {
    winners[read] = run_read(q, adj, betas, mix_seed(params.seed, read));
  };

  const unsigned want = std::max(1u, params.threads);
  if (want == 1) {
    for (std::uint32_t r = 0; r < params.reads; ++r) run_range(r);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < want; ++t)
      pool.emplace_back([&] {
        for (std::uint32_t r = next++; r < params.reads; r = next++)
          run_range(r);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<SampleRecord> records;
  records.reserve(params.reads);
  for (auto& a : winners) {
    SampleRecord r;
    r.energy = q.energy(a);  // exact energy, recomputed from scratch
    r.assignment = std::move(a);
    r.multiplicity = 1;
    records.push_back(std::move(r));
  }
  return SampleSet(std::move(records));
}

namespace {

void ground_block(const Qubo& q, const Adjacency& adj,
                  std::vector<std::uint8_t> bits, std::uint32_t low_vars,
                  GroundResult* out) {
  std::int64_t energy = q.energy(Assignment{bits});
  auto consider = [&](const std::vector<std::uint8_t>& b, std::int64_t e) {
    if (out->minimizers.empty() || e < out->min_energy) {
      out->min_energy = e;
      out->minimizers.clear();
      out->minimizers.push_back(Assignment{b});
    } else if (e == out->min_energy) {
      out->minimizers.push_back(Assignment{b});
    }
  };
  consider(bits, energy);
  const std::uint64_t steps = std::uint64_t{1} << low_vars;
  for (std::uint64_t g = 1; g < steps; ++g) {
    const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(g));
    energy += adj.delta(bits, v);
    bits[v] ^= 1;
    consider(bits, energy);
  }
}

}  // namespace

GroundResult exact_ground(const Qubo& q, unsigned threads) {
  if (q.n_vars > kExactGroundVarLimit)
    throw ValidationError("qubo has " + std::to_string(q.n_vars) +
                          " variables; exhaustive search is capped at " +
                          std::to_string(kExactGroundVarLimit));
  if (q.n_vars == 0) {
    GroundResult out;
    out.min_energy = q.offset;
    out.minimizers.push_back(Assignment{});
    return out;
  }

  const Adjacency adj(q);
  unsigned want = std::max(1u, threads);
  std::uint32_t top_bits = 0;
  while ((1u << top_bits) < want && top_bits + 1 < q.n_vars) ++top_bits;
  const std::uint32_t low_vars = q.n_vars - top_bits;
  const std::uint32_t blocks = 1u << top_bits;

  std::vector<GroundResult> parts(blocks);
  auto run_block = [&](std::uint32_t b) {
    std::vector<std::uint8_t> bits(q.n_vars, 0);
    for (std::uint32_t t = 0; t < top_bits; ++t)
      bits[low_vars + t] = (b >> t) & 1;
    ground_block(q, adj, std::move(bits), low_vars, &parts[b]);
  };

  if (blocks == 1 || want == 1) {
    for (std::uint32_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < want; ++t)
      pool.emplace_back([&] {
        for (std::uint32_t b = next++; b < blocks; b = next++) run_block(b);
      });
    for (auto& th : pool) th.join();
  }

  GroundResult out;
  out.min_energy = parts[0].min_energy;
  for (const auto& p : parts) out.min_energy = std::min(out.min_energy, p.min_energy);
  for (auto& p : parts)
    if (p.min_energy == out.min_energy)
      out.minimizers.insert(out.minimizers.end(),
                            std::make_move_iterator(p.minimizers.begin()),
                            std::make_move_iterator(p.minimizers.end()));
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

}  // namespace mqanneal
