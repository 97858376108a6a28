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

#include "mqanneal/nnf.hpp"

#include <algorithm>
#include <limits>

namespace mqanneal {

IntPoly IntPoly::constant(std::int64_t c) {
  IntPoly f;
  f.add_term(Monomial::one(), c);
  return f;
}

IntPoly IntPoly::monomial(const Monomial& m, std::int64_t c) {
  IntPoly f;
  f.add_term(m, c);
  return f;
}

void IntPoly::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t IntPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::size_t IntPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

VarId IntPoly::var_span() const {
  VarId span = 0;
  for (const auto& [m, c] : terms_) span = std::max(span, m.var_span());
  return span;
}

std::vector<VarId> IntPoly::support() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : terms_)
    vars.insert(vars.end(), m.vars().begin(), m.vars().end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

std::int64_t IntPoly::eval(const Assignment& a) const {
  if (var_span() > a.size())
    throw DimensionError("assignment too short for polynomial");
  std::int64_t acc = 0;
  for (const auto& [m, c] : terms_)
    if (m.eval(a)) acc += c;
  return acc;
}

IntPoly operator+(IntPoly a, const IntPoly& b) {
  a += b;
  return a;
}

IntPoly operator-(IntPoly a, const IntPoly& b) {
  a -= b;
  return a;
}

IntPoly operator*(IntPoly a, std::int64_t c) {
  a *= c;
  return a;
}

IntPoly anf_to_nnf(const AnfPoly& p, std::size_t term_cap) {
  IntPoly f;
  for (const auto& m : p.monomials()) {
    // f XOR m = f + m - 2 f m; the product stays multilinear because
    // merged() takes the union of the variable sets.
    IntPoly next = f;
    next.add_term(m, 1);
    for (const auto& [u, c] : f.terms()) next.add_term(u.merged(m), -2 * c);
    if (next.term_count() > term_cap)
      throw ResourceLimitError(
          "integer form exceeds the term cap of " + std::to_string(term_cap) +
          " (input has " + std::to_string(p.term_count()) + " monomials)");
    f = std::move(next);
  }
  return f;
}

std::int64_t eval_int(const IntPoly& f, const Assignment& a) {
  return f.eval(a);
}

std::uint64_t nnf_term_bound(const AnfPoly& p) {
  const std::size_t t = p.term_count();
  if (t >= 64) return std::numeric_limits<std::uint64_t>::max();
  return (std::uint64_t{1} << t) - 1;
}

}  // namespace mqanneal
