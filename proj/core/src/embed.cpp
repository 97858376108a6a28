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

#include "mqanneal/embed.hpp"

#include <algorithm>
#include <set>

namespace mqanneal {

std::string to_string(EmbedMethod m) {
  switch (m) {
    case EmbedMethod::kDirect:
      return "direct";
    case EmbedMethod::kTruncated:
      return "truncated";
    case EmbedMethod::kPenalty:
      return "penalty";
  }
  throw ValidationError("unknown embedding method");
}

EmbedMethod embed_method_from_string(std::string_view name) {
  if (name == "direct") return EmbedMethod::kDirect;
  if (name == "truncated") return EmbedMethod::kTruncated;
  if (name == "penalty") return EmbedMethod::kPenalty;
  throw ValidationError("unknown embedding method '" + std::string(name) +
                        "'");
}

Assignment Embedding::project(const Assignment& extended) const {
  if (extended.size() != qubo.n_vars)
    throw DimensionError("assignment does not match the embedding size");
  std::vector<std::uint8_t> bits(extended.bits().begin(),
                                 extended.bits().begin() + n_original);
  return Assignment{std::move(bits)};
}

Assignment Embedding::extend(const Assignment& original) const {
  if (original.size() != n_original)
    throw DimensionError("assignment does not match the original space");
  Assignment full = Assignment::zeros(qubo.n_vars);
  for (std::uint32_t i = 0; i < n_original; ++i) full.set(i, original[i]);
  for (const auto& part : parts) {
    const std::size_t f = part.fresh.size();
    if (f == 0) continue;
    if (f > 20)
      throw ResourceLimitError("part introduces too many variables to scan");
    std::uint32_t best_pattern = 0;
    std::int64_t best_energy = 0;
    for (std::uint32_t pattern = 0; pattern < (1u << f); ++pattern) {
      for (std::size_t b = 0; b < f; ++b)
        full.set(part.fresh[b], (pattern >> b) & 1);
      const std::int64_t e = part.sub.energy(full);
      if (pattern == 0 || e < best_energy) {
        best_energy = e;
        best_pattern = pattern;
      }
    }
    for (std::size_t b = 0; b < f; ++b)
      full.set(part.fresh[b], (best_pattern >> b) & 1);
  }
  return full;
}

IntPoly not_gate_penalty(VarId x, VarId out) {
  if (x == out) throw ValidationError("gate variables must be distinct");
  IntPoly s;
  s.add_term(Monomial::pair(x, out), 2);
  s.add_term(Monomial::var(x), -1);
  s.add_term(Monomial::var(out), -1);
  s.add_term(Monomial::one(), 1);
  return s;
}

IntPoly cnot_gate_penalty(VarId control, VarId target, VarId out,
                          VarId ancilla) {
  std::set<VarId> distinct{control, target, out, ancilla};
  if (distinct.size() != 4)
    throw ValidationError("gate variables must be distinct");
  IntPoly s;
  s.add_term(Monomial::pair(control, target), 2);
  s.add_term(Monomial::pair(control, out), -2);
  s.add_term(Monomial::pair(target, out), -2);
  s.add_term(Monomial::pair(control, ancilla), -4);
  s.add_term(Monomial::pair(target, ancilla), -4);
  s.add_term(Monomial::pair(out, ancilla), 4);
  s.add_term(Monomial::var(control), 1);
  s.add_term(Monomial::var(target), 1);
  s.add_term(Monomial::var(out), 1);
  s.add_term(Monomial::var(ancilla), 4);
  return s;
}

IntPoly toffoli_gate_penalty(VarId c1, VarId c2, VarId target, VarId out,
                             VarId cnot_ancilla, VarId and_ancilla) {
  std::set<VarId> distinct{c1, c2, target, out, cnot_ancilla, and_ancilla};
  if (distinct.size() != 6)
    throw ValidationError("gate variables must be distinct");
  IntPoly s = pair_penalty(c1, c2, and_ancilla);
  s += cnot_gate_penalty(and_ancilla, target, out, cnot_ancilla);
  return s;
}

ChunkPlan plan_chunks(std::uint32_t t, std::uint32_t k) {
  if (k < 3) throw ValidationError("chunk size k must be at least 3");
  if (t == 0) throw ValidationError("cannot chunk an empty equation");
  ChunkPlan plan;
  if (t <= k) {
    plan.consumed.push_back(t);
    plan.sizes.push_back(t);
    return plan;
  }
  plan.consumed.push_back(k - 1);
  std::uint32_t remaining = t - (k - 1);
  while (remaining > k - 1) {
    plan.consumed.push_back(k - 2);
    remaining -= k - 2;
  }
  plan.consumed.push_back(remaining);  // between 2 and k-1 terms

  for (std::size_t c = 0; c < plan.consumed.size(); ++c) {
    std::uint32_t size = plan.consumed[c];
    if (c > 0) ++size;                          // incoming chain link
    if (c + 1 < plan.consumed.size()) ++size;   // outgoing chain link
    plan.sizes.push_back(size);
  }
  return plan;
}

namespace {

// A part before the total variable count is known.
struct PartDraft {
  std::string label;
  IntPoly poly;
  std::vector<VarId> fresh;
};

Embedding materialize(EmbedMethod method, std::uint32_t n_original,
                      std::uint32_t total_vars, VarRegistry roles,
                      std::vector<PartDraft> drafts) {
  Embedding out;
  out.method = method;
  out.n_original = n_original;
  out.roles = std::move(roles);
  out.qubo.n_vars = total_vars;
  out.parts.reserve(drafts.size());
  for (auto& d : drafts) {
    EmbedPart part;
    part.label = std::move(d.label);
    part.sub = Qubo::from_poly(d.poly, total_vars);
    part.support = d.poly.support();
    part.fresh = std::move(d.fresh);
    out.qubo += part.sub;
    out.parts.push_back(std::move(part));
  }
  return out;
}

}  // namespace

Embedding embed_direct(const MQSystem& s, const DirectOptions& opts) {
  s.validate();
  IntPoly total;
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    try {
      total += anf_to_nnf(s.polys[i], opts.nnf_term_cap);
    } catch (const ResourceLimitError& e) {
      throw ResourceLimitError("polynomial " + std::to_string(i) + ": " +
                               e.what());
    }
  }

  QuadratizeResult qr =
      reduce_to_quadratic(total, opts.weighting, s.n_vars);
  const std::uint32_t total_vars = std::max(s.n_vars, qr.var_span);

  VarRegistry roles(s.n_vars, VarRole::original());
  std::vector<PartDraft> drafts;
  IntPoly residual = qr.poly;
  for (const auto& rec : qr.substitutions) {
    roles.push_back(VarRole::reduction(rec.i, rec.j));
    residual -= rec.penalty;
    drafts.push_back(PartDraft{"product " + std::to_string(rec.i) + " " +
                                   std::to_string(rec.j),
                               rec.penalty,
                               {rec.ancilla}});
  }
  drafts.push_back(PartDraft{"residual", std::move(residual), {}});

  return materialize(EmbedMethod::kDirect, s.n_vars, total_vars,
                     std::move(roles), std::move(drafts));
}

Embedding embed_truncated(const MQSystem& s, std::uint32_t k) {
  s.validate();
  if (k < 3) throw ValidationError("truncation length k must be at least 3");
  if (k > 24)
    throw ResourceLimitError("truncation length k above 24 is not supported");

  VarRegistry roles(s.n_vars, VarRole::original());
  std::vector<PartDraft> drafts;
  VarId cursor = s.n_vars;

  // Shared product ancillas for every quadratic monomial in the system.
  std::map<std::pair<VarId, VarId>, VarId> product_of;
  {
    std::set<std::pair<VarId, VarId>> pairs;
    for (const auto& p : s.polys)
      for (const auto& m : p.monomials())
        if (m.degree() == 2) pairs.insert({m.vars()[0], m.vars()[1]});
    for (const auto& [i, j] : pairs) {
      const VarId y = cursor++;
      product_of[{i, j}] = y;
      roles.push_back(VarRole::pair(i, j));
      drafts.push_back(PartDraft{"product " + std::to_string(i) + " " +
                                     std::to_string(j),
                                 pair_penalty(i, j, y),
                                 {y}});
    }
  }

  for (std::uint32_t e = 0; e < s.polys.size(); ++e) {
    const AnfPoly& p = s.polys[e];
    if (p.is_zero()) continue;

    bool has_const = false;
    std::vector<VarId> vars;
    for (const auto& m : p.monomials()) {
      if (m.is_constant())
        has_const = true;
      else if (m.degree() == 1)
        vars.push_back(m.vars()[0]);
      else
        vars.push_back(product_of.at({m.vars()[0], m.vars()[1]}));
    }
    std::sort(vars.begin(), vars.end());

    const std::uint32_t t =
        static_cast<std::uint32_t>(vars.size()) + (has_const ? 1 : 0);
    const ChunkPlan plan = plan_chunks(t, k);

    std::vector<VarId> chains;
    for (std::uint32_t c = 0; c < plan.chain_count(); ++c) {
      chains.push_back(cursor++);
      roles.push_back(VarRole::chain(e, c));
    }

    // Terms in block order: the constant first, then variables ascending.
    std::uint32_t taken = 0;
    for (std::size_t c = 0; c < plan.consumed.size(); ++c) {
      AnfPoly block;
      if (c > 0) block.toggle(Monomial::var(chains[c - 1]));
      for (std::uint32_t u = 0; u < plan.consumed[c]; ++u, ++taken) {
        if (taken == 0 && has_const)
          block.toggle(Monomial::one());
        else
          block.toggle(Monomial::var(vars[taken - (has_const ? 1 : 0)]));
      }
      std::vector<VarId> fresh;
      if (c + 1 < plan.consumed.size()) {
        block.toggle(Monomial::var(chains[c]));
        fresh.push_back(chains[c]);
      }

      QuadratizeResult qr =
          reduce_to_quadratic(anf_to_nnf(block), PenaltyWeighting::kDelta,
                              cursor);
      for (const auto& rec : qr.substitutions) {
        roles.push_back(VarRole::reduction(rec.i, rec.j));
        fresh.push_back(rec.ancilla);
        cursor = rec.ancilla + 1;
      }
      drafts.push_back(PartDraft{"eq " + std::to_string(e) + " block " +
                                     std::to_string(c),
                                 std::move(qr.poly), std::move(fresh)});
    }
  }

  return materialize(EmbedMethod::kTruncated, s.n_vars, cursor,
                     std::move(roles), std::move(drafts));
}

Embedding embed_penalty(const MQSystem& s) {
  s.validate();

  VarRegistry roles(s.n_vars, VarRole::original());
  std::vector<PartDraft> drafts;
  VarId cursor = s.n_vars;
  std::uint32_t gate_index = 0;

  for (std::uint32_t e = 0; e < s.polys.size(); ++e) {
    const AnfPoly& p = s.polys[e];
    if (p.is_zero()) continue;

    VarId wire = cursor++;
    roles.push_back(VarRole::output(e, 0));
    {
      IntPoly init;
      init.add_term(Monomial::var(wire), 1);
      drafts.push_back(
          PartDraft{"eq " + std::to_string(e) + " wire 0", init, {wire}});
    }

    std::uint32_t step = 1;
    auto emit = [&](const std::string& what, IntPoly poly,
                    std::vector<VarId> fresh) {
      drafts.push_back(PartDraft{"eq " + std::to_string(e) + " " + what,
                                 std::move(poly), std::move(fresh)});
    };

    // The constant first, then linear terms by id, then quadratic by pair.
    for (const auto& m : p.monomials()) {
      if (!m.is_constant()) continue;
      const VarId out = cursor++;
      roles.push_back(VarRole::output(e, step));
      emit("not " + std::to_string(gate_index),
           not_gate_penalty(wire, out), {out});
      wire = out;
      ++step;
      ++gate_index;
    }
    for (const auto& m : p.monomials()) {
      if (m.degree() != 1) continue;
      const VarId a = cursor++;
      roles.push_back(VarRole::gate(gate_index));
      const VarId out = cursor++;
      roles.push_back(VarRole::output(e, step));
      emit("cnot " + std::to_string(gate_index),
           cnot_gate_penalty(m.vars()[0], wire, out, a), {a, out});
      wire = out;
      ++step;
      ++gate_index;
    }
    for (const auto& m : p.monomials()) {
      if (m.degree() != 2) continue;
      const VarId cnot_a = cursor++;
      roles.push_back(VarRole::gate(gate_index));
      const VarId and_a = cursor++;
      roles.push_back(VarRole::gate(gate_index));
      const VarId out = cursor++;
      roles.push_back(VarRole::output(e, step));
      emit("toffoli " + std::to_string(gate_index),
           toffoli_gate_penalty(m.vars()[0], m.vars()[1], wire, out, cnot_a,
                                and_a),
           {cnot_a, and_a, out});
      wire = out;
      ++step;
      ++gate_index;
    }

    IntPoly fin;
    fin.add_term(Monomial::var(wire), 1);
    drafts.push_back(
        PartDraft{"eq " + std::to_string(e) + " output", fin, {}});
  }

  return materialize(EmbedMethod::kPenalty, s.n_vars, cursor,
                     std::move(roles), std::move(drafts));
}

}  // namespace mqanneal
