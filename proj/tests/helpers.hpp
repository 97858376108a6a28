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

// Oracles and fixtures shared by the test binaries.  Everything here is
// deliberately independent of the library internals it is used to check:
// brute-force scans, direct formula evaluation, part-wise search.

#ifndef MQANNEAL_TESTS_HELPERS_HPP_
#define MQANNEAL_TESTS_HELPERS_HPP_

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqanneal/anf.hpp"
#include "mqanneal/embed.hpp"
#include "mqanneal/nnf.hpp"

namespace testing {

/// Four-variable benchmark system used throughout the tests.  Its solution
/// set is exactly {0011, 1010}.
inline mqanneal::MQSystem reference_system() {
  return mqanneal::parse_system(
      "vars 4\n"
      "x1*x2 + x1*x3 + x1*x4 + x1 + x2*x3 + x2*x4 + x2 + x3*x4 + x4\n"
      "x1*x2 + x1*x3 + x2 + x3*x4 + x3\n"
      "x1*x2 + x1*x3 + x2*x3 + x2 + x3 + x4\n"
      "x1*x3 + x2*x4 + x4 + 1\n");
}

/// Exhaustive integer-polynomial minimisation over n variables, done with
/// bitmask term evaluation rather than the library's evaluators.
struct IntMinResult {
  std::int64_t min = 0;
  std::vector<std::uint32_t> minimizers;  // assignment bitmasks, bit v = x_v
};

inline IntMinResult exhaustive_int_min(const mqanneal::IntPoly& f,
                                       std::uint32_t n_vars) {
  if (n_vars > 24) throw std::runtime_error("exhaustive_int_min: too wide");
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (const auto& [mono, coeff] : f.terms()) {
    std::uint32_t mask = 0;
    for (auto v : mono.vars()) mask |= 1u << v;
    terms.emplace_back(mask, coeff);
  }
  IntMinResult out;
  bool first = true;
  for (std::uint32_t x = 0; x < (1u << n_vars); ++x) {
    std::int64_t e = 0;
    for (const auto& [mask, coeff] : terms)
      if ((x & mask) == mask) e += coeff;
    if (first || e < out.min) {
      out.min = e;
      out.minimizers.clear();
      first = false;
    }
    if (e == out.min) out.minimizers.push_back(x);
  }
  return out;
}

inline mqanneal::Assignment from_mask(std::uint32_t mask, std::uint32_t n) {
  mqanneal::Assignment a = mqanneal::Assignment::zeros(n);
  for (std::uint32_t v = 0; v < n; ++v) a.set(v, (mask >> v) & 1u);
  return a;
}

/// Checks that the embedding parts add up to the embedding qubo exactly.
inline bool parts_sum_matches(const mqanneal::Embedding& emb) {
  mqanneal::Qubo sum;
  sum.n_vars = emb.qubo.n_vars;
  for (const auto& part : emb.parts) sum += part.sub;
  return sum.offset == emb.qubo.offset && sum.linear == emb.qubo.linear &&
         sum.quadratic == emb.qubo.quadratic;
}

/// Whether a part is nonnegative at every assignment of its support.
inline bool part_nonnegative(const mqanneal::EmbedPart& part,
                             std::uint32_t total_vars) {
  if (part.support.size() > 20)
    throw std::runtime_error("part support too wide to enumerate");
  mqanneal::Assignment a = mqanneal::Assignment::zeros(total_vars);
  const std::uint32_t s = static_cast<std::uint32_t>(part.support.size());
  for (std::uint32_t combo = 0; combo < (1u << s); ++combo) {
    for (std::uint32_t b = 0; b < s; ++b)
      a.set(part.support[b], (combo >> b) & 1u);
    if (part.sub.energy(a) < 0) return false;
  }
  return true;
}

namespace detail {

inline bool zero_path_exists(const mqanneal::Embedding& emb, std::size_t p,
                             mqanneal::Assignment& a) {
  if (p == emb.parts.size()) return true;
  const auto& part = emb.parts[p];
  const std::uint32_t f = static_cast<std::uint32_t>(part.fresh.size());
  if (f > 12) throw std::runtime_error("fresh set too wide to enumerate");
  for (std::uint32_t combo = 0; combo < (1u << f); ++combo) {
    for (std::uint32_t b = 0; b < f; ++b)
      a.set(part.fresh[b], (combo >> b) & 1u);
    if (part.sub.energy(a) == 0 && zero_path_exists(emb, p + 1, a)) return true;
  }
  for (std::uint32_t b = 0; b < f; ++b) a.set(part.fresh[b], 0);
  return false;
}

}  // namespace detail

/**
 * All original assignments that extend to a zero-energy state, recovered
 * by depth-first search over the parts.  Sound for embeddings whose parts
 * are all pointwise nonnegative (an energy of zero then forces every part
 * to zero); the caller is expected to have checked that first.
 */
inline std::vector<mqanneal::Assignment> zero_projections(
    const mqanneal::Embedding& emb) {
  if (emb.n_original > 16)
    throw std::runtime_error("too many original variables to enumerate");
  // The search below assigns variables part by part, so every support must
  // be covered by the originals plus the fresh sets seen so far.
  std::vector<bool> seen(emb.qubo.n_vars, false);
  for (std::uint32_t v = 0; v < emb.n_original; ++v) seen[v] = true;
  for (const auto& part : emb.parts) {
    for (auto v : part.fresh) seen[v] = true;
    for (auto v : part.support)
      if (!seen[v])
        throw std::runtime_error("part '" + part.label +
                                 "' reads an unassigned variable");
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v])
      throw std::runtime_error("variable " + std::to_string(v) +
                               " is not introduced by any part");

  std::vector<mqanneal::Assignment> hits;
  mqanneal::Assignment a = mqanneal::Assignment::zeros(emb.qubo.n_vars);
  for (std::uint32_t x = 0; x < (1u << emb.n_original); ++x) {
    for (std::uint32_t v = 0; v < emb.n_original; ++v)
      a.set(v, (x >> v) & 1u);
    if (detail::zero_path_exists(emb, 0, a))
      hits.push_back(from_mask(x, emb.n_original));
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

/// Runs a command line, capturing interleaved stdout and stderr.
struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_command(const std::string& command) {
  CliResult r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testing

#endif  // MQANNEAL_TESTS_HELPERS_HPP_
