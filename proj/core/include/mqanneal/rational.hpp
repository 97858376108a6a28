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

#ifndef MQANNEAL_RATIONAL_HPP_
#define MQANNEAL_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace mqanneal {

/// Exact rational arithmetic for Ising transforms and resource estimates.
using Rational = boost::rational<std::int64_t>;

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Smallest integer >= r.
inline std::int64_t ceil_rational(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

/// Decimal rendering with enough digits for report output.
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace mqanneal

#endif  // MQANNEAL_RATIONAL_HPP_
