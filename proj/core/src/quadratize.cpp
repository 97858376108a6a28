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

#include "mqanneal/quadratize.hpp"

#include <algorithm>
#include <cstdlib>

namespace mqanneal {

IntPoly pair_penalty(VarId i, VarId j, VarId ancilla) {
  if (i == j || i == ancilla || j == ancilla)
    throw ValidationError("pair penalty needs three distinct variables");
  IntPoly s;
  s.add_term(Monomial::var(ancilla), 3);
  s.add_term(Monomial::pair(i, j), 1);
  s.add_term(Monomial::pair(i, ancilla), -2);
  s.add_term(Monomial::pair(j, ancilla), -2);
  return s;
}

namespace {

using Pair = std::pair<VarId, VarId>;

// The pair present in the largest number of degree >= 3 monomials, or
// nullopt when f is already quadratic.  Ties go to the smallest pair.
std::optional<Pair> most_frequent_pair(const IntPoly& f) {
  std::map<Pair, std::size_t> counts;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() < 3) continue;
    const auto& v = m.vars();
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        ++counts[{v[a], v[b]}];
  }
  if (counts.empty()) return std::nullopt;
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

}  // namespace

QuadratizeResult reduce_to_quadratic(const IntPoly& f, PenaltyWeighting mode,
                                     std::optional<VarId> first_ancilla) {
  QuadratizeResult out;
  out.poly = f;
  VarId next = first_ancilla.value_or(f.var_span());
  if (next < f.var_span())
    throw ValidationError("ancilla ids would collide with input variables");

  while (auto picked = most_frequent_pair(out.poly)) {
    const auto [i, j] = *picked;
    std::int64_t pos = 0, neg = 0, per_term = 0;
    IntPoly rest;
    IntPoly replaced;
    const VarId a = next++;
    for (const auto& [m, c] : out.poly.terms()) {
      if (m.degree() >= 3 && m.contains(i) && m.contains(j)) {
        replaced.add_term(m.without(i, j).merged(Monomial::var(a)), c);
        per_term += 1 + std::abs(c);
        if (c > 0)
          pos += c;
        else
          neg -= c;
      } else {
        rest.add_term(m, c);
      }
    }
    const std::int64_t weight =
        mode == PenaltyWeighting::kPerTerm ? per_term : 1 + std::max(pos, neg);

    SubstitutionRecord rec;
    rec.i = i;
    rec.j = j;
    rec.ancilla = a;
    rec.weight = weight;
    rec.penalty = pair_penalty(i, j, a) * weight;

    rest += replaced;
    rest += rec.penalty;
    out.poly = std::move(rest);
    out.ancillas.pairs[{i, j}] = a;
    out.substitutions.push_back(std::move(rec));
  }

  out.var_span = out.substitutions.empty() ? f.var_span() : next;
  return out;
}

std::int64_t max_abs_coefficient(const IntPoly& f) {
  std::int64_t best = 0;
  for (const auto& [m, c] : f.terms())
    if (!m.is_constant()) best = std::max(best, std::abs(c));
  return best;
}

}  // namespace mqanneal
