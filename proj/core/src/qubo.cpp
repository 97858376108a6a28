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

#include "mqanneal/qubo.hpp"

#include <algorithm>
#include <cstdlib>

namespace mqanneal {

Qubo Qubo::from_poly(const IntPoly& f, std::uint32_t n_vars) {
  if (f.degree() > 2)
    throw ValidationError("polynomial has degree above 2");
  if (f.var_span() > n_vars)
    throw ValidationError("polynomial uses a variable id outside 0.." +
                          std::to_string(n_vars) + "-1");
  Qubo q;
  q.n_vars = n_vars;
  for (const auto& [m, c] : f.terms()) {
    if (m.is_constant())
      q.offset += c;
    else if (m.degree() == 1)
      q.add_linear(m.vars()[0], c);
    else
      q.add_quadratic(m.vars()[0], m.vars()[1], c);
  }
  return q;
}

std::int64_t Qubo::energy(const Assignment& a) const {
  if (a.size() != n_vars)
    throw DimensionError("assignment has " + std::to_string(a.size()) +
                         " bits, qubo has " + std::to_string(n_vars) +
                         " variables");
  std::int64_t e = offset;
  for (const auto& [i, c] : linear)
    if (a[i]) e += c;
  for (const auto& [ij, c] : quadratic)
    if (a[ij.first] && a[ij.second]) e += c;
  return e;
}

void Qubo::add_linear(VarId i, std::int64_t c) {
  if (i >= n_vars) throw ValidationError("variable id out of range");
  if (c == 0) return;
  auto [it, inserted] = linear.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) linear.erase(it);
  }
}

void Qubo::add_quadratic(VarId i, VarId j, std::int64_t c) {
  if (i == j) throw ValidationError("quadratic term needs distinct variables");
  if (i > j) std::swap(i, j);
  if (j >= n_vars) throw ValidationError("variable id out of range");
  if (c == 0) return;
  auto [it, inserted] = quadratic.try_emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) quadratic.erase(it);
  }
}

Qubo& Qubo::operator+=(const Qubo& other) {
  n_vars = std::max(n_vars, other.n_vars);
  offset += other.offset;
  for (const auto& [i, c] : other.linear) add_linear(i, c);
  for (const auto& [ij, c] : other.quadratic)
    add_quadratic(ij.first, ij.second, c);
  return *this;
}

std::int64_t Qubo::max_abs_coefficient() const {
  std::int64_t best = 0;
  for (const auto& [i, c] : linear) best = std::max(best, std::abs(c));
  for (const auto& [ij, c] : quadratic) best = std::max(best, std::abs(c));
  return best;
}

Qubo operator+(Qubo a, const Qubo& b) {
  a += b;
  return a;
}

ReducedQubo fix_variables(const Qubo& q, const PartialAssignment& fixed) {
  for (const auto& [i, v] : fixed) {
    if (i >= q.n_vars)
      throw ValidationError("fixed variable " + std::to_string(i) +
                            " out of range");
    if (v > 1) throw ValidationError("fixed values must be 0 or 1");
  }

  ReducedQubo out;
  std::vector<std::int32_t> remap(q.n_vars, -1);
  for (VarId i = 0; i < q.n_vars; ++i) {
    if (fixed.count(i)) continue;
    remap[i] = static_cast<std::int32_t>(out.kept.size());
    out.kept.push_back(i);
  }
  out.qubo.n_vars = static_cast<std::uint32_t>(out.kept.size());
  out.qubo.offset = q.offset;

  auto value = [&fixed](VarId i) { return fixed.at(i); };

  for (const auto& [i, c] : q.linear) {
    if (remap[i] >= 0)
      out.qubo.add_linear(static_cast<VarId>(remap[i]), c);
    else if (value(i))
      out.qubo.offset += c;
  }
  for (const auto& [ij, c] : q.quadratic) {
    const auto [i, j] = ij;
    const bool fi = remap[i] < 0, fj = remap[j] < 0;
    if (!fi && !fj) {
      out.qubo.add_quadratic(static_cast<VarId>(remap[i]),
                             static_cast<VarId>(remap[j]), c);
    } else if (fi && fj) {
      if (value(i) && value(j)) out.qubo.offset += c;
    } else if (fi) {
      if (value(i)) out.qubo.add_linear(static_cast<VarId>(remap[j]), c);
    } else {
      if (value(j)) out.qubo.add_linear(static_cast<VarId>(remap[i]), c);
    }
  }
  return out;
}

Assignment complete_assignment(std::uint32_t n_vars,
                               const PartialAssignment& fixed,
                               const std::vector<VarId>& kept,
                               const Assignment& reduced) {
  if (reduced.size() != kept.size())
    throw DimensionError("reduced assignment does not match kept variables");
  if (fixed.size() + kept.size() != n_vars)
    throw DimensionError("fixed plus kept variables do not cover the qubo");
  Assignment full = Assignment::zeros(n_vars);
  for (const auto& [i, v] : fixed) full.set(i, v);
  for (std::size_t r = 0; r < kept.size(); ++r) full.set(kept[r], reduced[r]);
  return full;
}

IsingModel to_ising(const Qubo& q) {
  IsingModel m;
  m.n_vars = q.n_vars;
  m.offset = Rational(q.offset);
  // x = (1 - s)/2:  c x -> c/2 - (c/2) s
  //                 c x y -> c/4 - (c/4) s_x - (c/4) s_y + (c/4) s_x s_y
  for (const auto& [i, c] : q.linear) {
    m.offset += Rational(c, 2);
    m.h[i] -= Rational(c, 2);
  }
  for (const auto& [ij, c] : q.quadratic) {
    m.offset += Rational(c, 4);
    m.h[ij.first] -= Rational(c, 4);
    m.h[ij.second] -= Rational(c, 4);
    m.J[ij] += Rational(c, 4);
  }
  std::erase_if(m.h, [](const auto& kv) { return kv.second == Rational(0); });
  std::erase_if(m.J, [](const auto& kv) { return kv.second == Rational(0); });
  return m;
}

Rational IsingModel::energy(const std::vector<int>& spins) const {
  if (spins.size() != n_vars)
    throw DimensionError("spin vector does not match model size");
  for (int s : spins)
    if (s != 1 && s != -1) throw ValidationError("spins must be +1 or -1");
  Rational e = offset;
  for (const auto& [i, c] : h) e += c * spins[i];
  for (const auto& [ij, c] : J) e += c * (spins[ij.first] * spins[ij.second]);
  return e;
}

namespace {

std::int64_t integral_or_throw(const Rational& r) {
  if (r.denominator() != 1)
    throw ValidationError("ising model does not map to integer qubo");
  return r.numerator();
}

}  // namespace

Qubo from_ising(const IsingModel& m) {
  // s = 1 - 2x: h s -> h - 2 h x;  J s s' -> J - 2J x - 2J x' + 4J x x'
  Qubo q;
  q.n_vars = m.n_vars;
  Rational offset = m.offset;
  std::map<VarId, Rational> lin;
  for (const auto& [i, c] : m.h) {
    offset += c;
    lin[i] -= c * 2;
  }
  for (const auto& [ij, c] : m.J) {
    offset += c;
    lin[ij.first] -= c * 2;
    lin[ij.second] -= c * 2;
    q.add_quadratic(ij.first, ij.second, integral_or_throw(c * 4));
  }
  q.offset = integral_or_throw(offset);
  for (const auto& [i, c] : lin) q.add_linear(i, integral_or_throw(c));
  return q;
}

}  // namespace mqanneal
