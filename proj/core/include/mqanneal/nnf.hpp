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

#ifndef MQANNEAL_NNF_HPP_
#define MQANNEAL_NNF_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "mqanneal/anf.hpp"

namespace mqanneal {

/**
 * Multilinear polynomial with integer coefficients.
 *
 * Terms are kept in canonical monomial order with no zero coefficients,
 * so two polynomials represent the same function exactly when they
 * compare equal.
 */
class IntPoly {
 public:
  IntPoly() = default;

  static IntPoly constant(std::int64_t c);
  static IntPoly monomial(const Monomial& m, std::int64_t c = 1);

  /// Adds c * m, erasing the term if the coefficient reaches zero.
  void add_term(const Monomial& m, std::int64_t c);
  std::int64_t coefficient(const Monomial& m) const;

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  /// 1 + largest variable id appearing, 0 for a constant polynomial.
  VarId var_span() const;
  /// Sorted list of variables with at least one term.
  std::vector<VarId> support() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(std::int64_t c);

  /// Integer evaluation over {0,1}.  Throws DimensionError if a is short.
  std::int64_t eval(const Assignment& a) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(IntPoly a, std::int64_t c);

/// Default cap on intermediate term counts during ANF conversion.
inline constexpr std::size_t kDefaultNnfTermCap = std::size_t{1} << 22;

/**
 * Converts an XOR of monomials to its unique integer multilinear form.
 *
 * Folds one monomial at a time through x XOR y = x + y - 2xy, in canonical
 * monomial order.  The result evaluates to p(a) in {0,1} at every Boolean
 * point.  Throws ResourceLimitError when an intermediate polynomial would
 * exceed term_cap terms.
 */
IntPoly anf_to_nnf(const AnfPoly& p, std::size_t term_cap = kDefaultNnfTermCap);

/// Evaluates f at a Boolean point (alias of IntPoly::eval).
std::int64_t eval_int(const IntPoly& f, const Assignment& a);

/// Upper bound 2^t - 1 on the term count of anf_to_nnf for a t-term input,
/// saturating at the maximum representable value.
std::uint64_t nnf_term_bound(const AnfPoly& p);

}  // namespace mqanneal

#endif  // MQANNEAL_NNF_HPP_
