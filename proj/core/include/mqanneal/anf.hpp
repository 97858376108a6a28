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

#ifndef MQANNEAL_ANF_HPP_
#define MQANNEAL_ANF_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mqanneal/errors.hpp"

namespace mqanneal {

using VarId = std::uint32_t;

class Assignment;

/**
 * Product of distinct Boolean variables.
 *
 * The empty product is the constant 1.  Variables are kept sorted and
 * duplicate-free (x^2 = x), so equal products compare equal.  Ordering is
 * by degree first, then lexicographic on the variable ids.
 */
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial var(VarId i) { return Monomial({i}); }
  static Monomial pair(VarId i, VarId j);
  /// Builds from an arbitrary variable list; sorts and removes duplicates.
  static Monomial product(std::vector<VarId> vars);

  std::size_t degree() const { return vars_.size(); }
  bool is_constant() const { return vars_.empty(); }
  const std::vector<VarId>& vars() const { return vars_; }
  bool contains(VarId v) const;

  /// 1 + largest variable id, or 0 for the constant monomial.
  VarId var_span() const { return vars_.empty() ? 0 : vars_.back() + 1; }

  bool eval(const Assignment& a) const;

  /// Multilinear product: union of the two variable sets.
  Monomial merged(const Monomial& other) const;
  /// Copy with the given variables removed.
  Monomial without(VarId i, VarId j) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.vars_ == b.vars_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.vars_.size() != b.vars_.size())
      return a.vars_.size() < b.vars_.size();
    return a.vars_ < b.vars_;
  }

 private:
  explicit Monomial(std::vector<VarId> vars) : vars_(std::move(vars)) {}

  std::vector<VarId> vars_;
};

/// A point of the Boolean cube; bit i is the value of variable i.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> bits);
  static Assignment zeros(std::size_t n);
  /// Parses "0101..." (variable 0 first).  Throws ParseError on other input.
  static Assignment from_string(std::string_view s);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, std::uint8_t v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend bool operator<(const Assignment& a, const Assignment& b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/**
 * Polynomial over F2 in algebraic normal form: an XOR of monomials.
 *
 * Stored as the set of monomials with coefficient 1; toggling a monomial
 * twice removes it again.
 */
class AnfPoly {
 public:
  AnfPoly() = default;

  /// Adds m over F2 (inserts, or erases if already present).
  void toggle(const Monomial& m);
  bool contains(const Monomial& m) const;

  std::size_t term_count() const { return monomials_.size(); }
  bool is_zero() const { return monomials_.empty(); }
  std::size_t degree() const;
  /// 1 + largest variable id appearing, or 0 for a constant polynomial.
  VarId var_span() const;
  const std::set<Monomial>& monomials() const { return monomials_; }

  /// XOR of the two polynomials.
  AnfPoly& operator+=(const AnfPoly& other);

  /// Evaluates over F2.  Throws DimensionError if a is too short.
  int eval(const Assignment& a) const;

  friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

 private:
  std::set<Monomial> monomials_;
};

AnfPoly operator+(AnfPoly a, const AnfPoly& b);

/// A system of Boolean polynomial equations p_i = 0 over variables 0..n-1.
struct MQSystem {
  std::uint32_t n_vars = 0;
  std::vector<AnfPoly> polys;

  /// Checks ids are in range and every polynomial has degree at most 2.
  void validate() const;
};

int eval_poly(const AnfPoly& p, const Assignment& a);
/// Residual vector: entry i is p_i(a) over F2.
std::vector<std::uint8_t> eval_system(const MQSystem& s, const Assignment& a);
bool is_solution(const MQSystem& s, const Assignment& a);

/// Hard cap for exhaustive system enumeration.
inline constexpr std::uint32_t kBruteForceVarLimit = 28;

/**
 * All solutions of the system, by exhaustive enumeration.
 *
 * Returns assignments in increasing lexicographic order (variable 0 first).
 * Refuses systems above kBruteForceVarLimit variables with ValidationError.
 * The search may be partitioned across threads; results do not depend on
 * the thread count.
 */
std::vector<Assignment> brute_force_solutions(const MQSystem& s,
                                              unsigned threads = 1);

struct PlantedInstance {
  MQSystem system;
  Assignment solution;
};

/**
 * Random degree-2 system with a known solution.
 *
 * Draws a uniform assignment, then for each of the m polynomials includes
 * each of the 1 + n + n(n-1)/2 candidate monomials (constant, then linear
 * by id, then pairs in lexicographic order) independently with probability
 * 1/2, finally toggling the constant term wherever the planted point would
 * violate the equation.  Same seed, same instance, on any platform.
 */
PlantedInstance generate_planted(std::uint32_t n_vars, std::uint32_t m_polys,
                                 std::uint64_t seed);

/**
 * Parses the textual instance format:
 *
 *   vars <n>
 *   <term> + <term> + ...      one polynomial per line, each read as "= 0"
 *
 * where a term is `1`, `x<i>`, or `x<i>*x<j>` with 1-based indices and
 * i < j.  A line consisting of `0` is the empty polynomial.  Blank lines
 * are skipped and `#` starts a comment.  Repeated terms cancel in pairs.
 */
MQSystem parse_system(std::string_view text);

/// Inverse of parse_system; output parses back to an equal system.
std::string format_system(const MQSystem& s);

}  // namespace mqanneal

#endif  // MQANNEAL_ANF_HPP_
