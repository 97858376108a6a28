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

#include "mqanneal/anf.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <random>
#include <sstream>
#include <thread>

namespace mqanneal {

Monomial Monomial::pair(VarId i, VarId j) {
  if (i == j) throw ValidationError("pair monomial needs distinct variables");
  return product({i, j});
}

Monomial Monomial::product(std::vector<VarId> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return Monomial(std::move(vars));
}

bool Monomial::contains(VarId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Monomial::eval(const Assignment& a) const {
  if (var_span() > a.size())
    throw DimensionError("assignment too short for monomial");
  for (VarId v : vars_)
    if (!a[v]) return false;
  return true;
}

Monomial Monomial::merged(const Monomial& other) const {
  std::vector<VarId> out;
  out.reserve(vars_.size() + other.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                 other.vars_.end(), std::back_inserter(out));
  return Monomial(std::move(out));
}

Monomial Monomial::without(VarId i, VarId j) const {
  std::vector<VarId> out;
  out.reserve(vars_.size());
  for (VarId v : vars_)
    if (v != i && v != j) out.push_back(v);
  return Monomial(std::move(out));
}

Assignment::Assignment(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

Assignment Assignment::zeros(std::size_t n) {
  return Assignment(std::vector<std::uint8_t>(n, 0));
}

Assignment Assignment::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '0')
      bits.push_back(0);
    else if (s[i] == '1')
      bits.push_back(1);
    else
      throw ParseError("expected '0' or '1'", 1, i + 1);
  }
  return Assignment(std::move(bits));
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

void AnfPoly::toggle(const Monomial& m) {
  auto it = monomials_.find(m);
  if (it == monomials_.end())
    monomials_.insert(m);
  else
    monomials_.erase(it);
}

bool AnfPoly::contains(const Monomial& m) const {
  return monomials_.count(m) != 0;
}

std::size_t AnfPoly::degree() const {
  std::size_t d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

VarId AnfPoly::var_span() const {
  VarId span = 0;
  for (const auto& m : monomials_) span = std::max(span, m.var_span());
  return span;
}

AnfPoly& AnfPoly::operator+=(const AnfPoly& other) {
  for (const auto& m : other.monomials_) toggle(m);
  return *this;
}

int AnfPoly::eval(const Assignment& a) const {
  if (var_span() > a.size())
    throw DimensionError("assignment too short for polynomial");
  int acc = 0;
  for (const auto& m : monomials_) acc ^= m.eval(a) ? 1 : 0;
  return acc;
}

AnfPoly operator+(AnfPoly a, const AnfPoly& b) {
  a += b;
  return a;
}

void MQSystem::validate() const {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].degree() > 2)
      throw ValidationError("polynomial " + std::to_string(i) +
                            " has degree above 2");
    if (polys[i].var_span() > n_vars)
      throw ValidationError("polynomial " + std::to_string(i) +
                            " uses a variable outside 0.." +
                            std::to_string(n_vars) + "-1");
  }
}

int eval_poly(const AnfPoly& p, const Assignment& a) { return p.eval(a); }

std::vector<std::uint8_t> eval_system(const MQSystem& s, const Assignment& a) {
  if (a.size() != s.n_vars)
    throw DimensionError("assignment has " + std::to_string(a.size()) +
                         " bits, system has " + std::to_string(s.n_vars) +
                         " variables");
  std::vector<std::uint8_t> out;
  out.reserve(s.polys.size());
  for (const auto& p : s.polys)
    out.push_back(static_cast<std::uint8_t>(p.eval(a)));
  return out;
}

bool is_solution(const MQSystem& s, const Assignment& a) {
  auto r = eval_system(s, a);
  return std::all_of(r.begin(), r.end(), [](std::uint8_t b) { return !b; });
}

namespace {

// Flip tables: for each variable, the polynomials whose parity toggles when
// it flips, given the current value of the partner variable (or always, for
// a linear term; partner == -1).
struct CompiledSystem {
  std::uint32_t n_vars;
  std::vector<std::uint8_t> const_parity;
  std::vector<std::vector<std::pair<std::uint32_t, std::int32_t>>> flips;
};

CompiledSystem compile(const MQSystem& s) {
  CompiledSystem c;
  c.n_vars = s.n_vars;
  c.const_parity.assign(s.polys.size(), 0);
  c.flips.assign(s.n_vars, {});
  for (std::uint32_t p = 0; p < s.polys.size(); ++p) {
    for (const auto& m : s.polys[p].monomials()) {
      const auto& v = m.vars();
      if (v.empty()) {
        c.const_parity[p] ^= 1;
      } else if (v.size() == 1) {
        c.flips[v[0]].push_back({p, -1});
      } else if (v.size() == 2) {
        c.flips[v[0]].push_back({p, static_cast<std::int32_t>(v[1])});
        c.flips[v[1]].push_back({p, static_cast<std::int32_t>(v[0])});
      } else {
        throw ValidationError("brute force requires degree at most 2");
      }
    }
  }
  return c;
}

// Enumerates all settings of vars [0, low_vars) with the remaining bits
// fixed as given, appending solutions found.
void enumerate_block(const CompiledSystem& c, const MQSystem& s,
                     std::vector<std::uint8_t> bits, std::uint32_t low_vars,
                     std::vector<Assignment>* out) {
  std::vector<std::uint8_t> value(s.polys.size());
  std::size_t unsat = 0;
  {
    Assignment a{bits};
    for (std::size_t p = 0; p < s.polys.size(); ++p) {
      value[p] = static_cast<std::uint8_t>(s.polys[p].eval(a));
      unsat += value[p];
    }
  }
  if (unsat == 0) out->push_back(Assignment{bits});
  const std::uint64_t steps = std::uint64_t{1} << low_vars;
  for (std::uint64_t g = 1; g < steps; ++g) {
    const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(g));
    for (const auto& [p, partner] : c.flips[v]) {
      const bool toggles = partner < 0 || bits[static_cast<std::size_t>(partner)];
      if (toggles) {
        value[p] ^= 1;
        unsat += value[p] ? 1 : -1;
      }
    }
    bits[v] ^= 1;
    if (unsat == 0) out->push_back(Assignment{bits});
  }
}

}  // namespace

std::vector<Assignment> brute_force_solutions(const MQSystem& s,
                                              unsigned threads) {
  if (s.n_vars > kBruteForceVarLimit)
    throw ValidationError("system has " + std::to_string(s.n_vars) +
                          " variables; exhaustive search is capped at " +
                          std::to_string(kBruteForceVarLimit));
  s.validate();
  const CompiledSystem c = compile(s);

  if (s.n_vars == 0) {
    std::vector<Assignment> out;
    Assignment empty;
    if (is_solution(s, empty)) out.push_back(empty);
    return out;
  }

  unsigned want = std::max(1u, threads);
  std::uint32_t top_bits = 0;
  while ((1u << top_bits) < want && top_bits + 1 < s.n_vars) ++top_bits;
  const std::uint32_t low_vars = s.n_vars - top_bits;
  const std::uint32_t blocks = 1u << top_bits;

  std::vector<std::vector<Assignment>> found(blocks);
  auto run_block = [&](std::uint32_t b) {
    std::vector<std::uint8_t> bits(s.n_vars, 0);
    for (std::uint32_t t = 0; t < top_bits; ++t)
      bits[low_vars + t] = (b >> t) & 1;
    enumerate_block(c, s, std::move(bits), low_vars, &found[b]);
  };

  if (blocks == 1 || want == 1) {
    for (std::uint32_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint32_t> next{0};
    for (unsigned t = 0; t < want; ++t)
      pool.emplace_back([&] {
        for (std::uint32_t b = next++; b < blocks; b = next++) run_block(b);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<Assignment> out;
  for (auto& part : found)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end());
  return out;
}

PlantedInstance generate_planted(std::uint32_t n_vars, std::uint32_t m_polys,
                                 std::uint64_t seed) {
  if (n_vars == 0) throw ValidationError("planted instance needs n >= 1");
  if (m_polys == 0) throw ValidationError("planted instance needs m >= 1");
  std::mt19937_64 rng(seed);
  // Raw engine bits only; std distributions are not portable across
  // standard libraries.
  auto coin = [&rng]() -> bool { return rng() & 1; };

  std::vector<std::uint8_t> bits(n_vars);
  for (auto& b : bits) b = coin() ? 1 : 0;
  Assignment planted{bits};

  MQSystem s;
  s.n_vars = n_vars;
  s.polys.reserve(m_polys);
  for (std::uint32_t p = 0; p < m_polys; ++p) {
    AnfPoly poly;
    if (coin()) poly.toggle(Monomial::one());
    for (VarId i = 0; i < n_vars; ++i)
      if (coin()) poly.toggle(Monomial::var(i));
    for (VarId i = 0; i < n_vars; ++i)
      for (VarId j = i + 1; j < n_vars; ++j)
        if (coin()) poly.toggle(Monomial::pair(i, j));
    if (poly.eval(planted)) poly.toggle(Monomial::one());
    s.polys.push_back(std::move(poly));
  }
  return PlantedInstance{std::move(s), std::move(planted)};
}

namespace {

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  if (pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Parses "x<digits>" starting at pos; advances pos past the digits.
VarId parse_var_token(std::string_view term, std::size_t& pos,
                      std::uint32_t n_vars, std::size_t line_no,
                      std::size_t col) {
  if (pos >= term.size() || term[pos] != 'x')
    throw ParseError("expected a term of the form 1, x<i> or x<i>*x<j>",
                     line_no, col);
  ++pos;
  std::size_t start = pos;
  while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
    ++pos;
  if (start == pos)
    throw ParseError("expected a variable index after 'x'", line_no, col);
  unsigned long long idx = 0;
  for (std::size_t i = start; i < pos; ++i) {
    idx = idx * 10 + static_cast<unsigned long long>(term[i] - '0');
    if (idx > 0xffffffffull)
      throw ParseError("variable index out of range", line_no, col);
  }
  if (idx < 1 || idx > n_vars)
    throw ParseError("variable x" + std::to_string(idx) +
                         " outside declared range 1.." + std::to_string(n_vars),
                     line_no, col);
  return static_cast<VarId>(idx - 1);
}

Monomial parse_term(std::string_view term, std::uint32_t n_vars,
                    std::size_t line_no, std::size_t col) {
  // Whitespace inside a term is ignored ("x1 * x2").
  std::string compact;
  compact.reserve(term.size());
  for (char ch : term)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty())
    throw ParseError("empty term", line_no, col);
  if (compact == "1") return Monomial::one();

  std::size_t pos = 0;
  VarId i = parse_var_token(compact, pos, n_vars, line_no, col);
  if (pos == compact.size()) return Monomial::var(i);
  if (compact[pos] != '*')
    throw ParseError("unexpected characters in term", line_no, col);
  ++pos;
  VarId j = parse_var_token(compact, pos, n_vars, line_no, col);
  if (pos != compact.size())
    throw ParseError("unexpected characters in term", line_no, col);
  if (i == j) return Monomial::var(i);
  return Monomial::pair(i, j);
}

}  // namespace

MQSystem parse_system(std::string_view text) {
  MQSystem s;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (!is_blank(line)) {
      if (!have_header) {
        std::istringstream in{std::string(line)};
        std::string kw;
        long long n = -1;
        in >> kw >> n;
        std::string rest;
        if (kw != "vars" || n < 0 || (in >> rest))
          throw ParseError("expected header 'vars <n>'", line_no, 1);
        s.n_vars = static_cast<std::uint32_t>(n);
        have_header = true;
      } else {
        std::size_t first = line.find_first_not_of(" \t\r");
        std::size_t last = line.find_last_not_of(" \t\r");
        std::string_view body = line.substr(first, last - first + 1);
        AnfPoly poly;
        if (body != "0") {
          std::size_t term_start = 0;
          while (true) {
            auto plus = body.find('+', term_start);
            std::string_view term = body.substr(
                term_start, (plus == std::string_view::npos ? body.size()
                                                            : plus) -
                                term_start);
            std::size_t col = first + term_start + 1;
            auto lead = term.find_first_not_of(" \t\r");
            if (lead != std::string_view::npos) col += lead;
            poly.toggle(parse_term(term, s.n_vars, line_no, col));
            if (plus == std::string_view::npos) break;
            term_start = plus + 1;
          }
        }
        s.polys.push_back(std::move(poly));
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!have_header) throw ParseError("missing 'vars <n>' header", line_no, 1);
  return s;
}

namespace {

// Print order: compare variable lists element-wise; a strict prefix comes
// after its extensions, and the constant term comes last.
bool print_less(const Monomial& a, const Monomial& b) {
  const auto& u = a.vars();
  const auto& v = b.vars();
  std::size_t i = 0;
  while (i < u.size() && i < v.size()) {
    if (u[i] != v[i]) return u[i] < v[i];
    ++i;
  }
  return u.size() > v.size();
}

void format_term(std::string* out, const Monomial& m) {
  if (m.is_constant()) {
    *out += "1";
  } else if (m.degree() == 1) {
    *out += "x" + std::to_string(m.vars()[0] + 1);
  } else {
    *out += "x" + std::to_string(m.vars()[0] + 1) + "*x" +
            std::to_string(m.vars()[1] + 1);
  }
}

}  // namespace

std::string format_system(const MQSystem& s) {
  s.validate();
  std::string out = "vars " + std::to_string(s.n_vars) + "\n";
  for (const auto& p : s.polys) {
    if (p.is_zero()) {
      out += "0\n";
      continue;
    }
    std::vector<Monomial> terms(p.monomials().begin(), p.monomials().end());
    std::sort(terms.begin(), terms.end(), print_less);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out += " + ";
      format_term(&out, terms[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace mqanneal
