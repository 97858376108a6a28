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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mqanneal/qubo.hpp"

using namespace mqanneal;

namespace {

Qubo random_qubo(std::mt19937_64& rng, std::uint32_t n) {
  Qubo q;
  q.n_vars = n;
  q.offset = static_cast<std::int64_t>(rng() % 21) - 10;
  for (VarId i = 0; i < n; ++i)
    if (rng() & 1)
      q.add_linear(i, static_cast<std::int64_t>(rng() % 11) - 5);
  for (VarId i = 0; i < n; ++i)
    for (VarId j = i + 1; j < n; ++j)
      if (rng() & 1)
        q.add_quadratic(i, j, static_cast<std::int64_t>(rng() % 11) - 5);
  return q;
}

}  // namespace

TEST_CASE("from_poly and energy") {
  IntPoly f = IntPoly::constant(2);
  f.add_term(Monomial::var(0), 3);
  f.add_term(Monomial::pair(0, 2), -4);
  const Qubo q = Qubo::from_poly(f, 3);
  CHECK(q.offset == 2);
  CHECK(q.linear.at(0) == 3);
  CHECK(q.quadratic.at({0, 2}) == -4);
  CHECK(q.energy(Assignment::from_string("101")) == 2 + 3 - 4);
  CHECK(q.energy(Assignment::from_string("000")) == 2);
  CHECK(q.term_count() == 2);
  CHECK(q.max_abs_coefficient() == 4);

  CHECK_THROWS_AS(q.energy(Assignment::from_string("10")), DimensionError);
  CHECK_THROWS_AS(Qubo::from_poly(f, 2), ValidationError);
  IntPoly cubic = IntPoly::monomial(Monomial::product({0, 1, 2}), 1);
  CHECK_THROWS_AS(Qubo::from_poly(cubic, 3), ValidationError);
}

TEST_CASE("accumulators canonicalise and drop zeros") {
  Qubo q;
  q.n_vars = 3;
  q.add_quadratic(2, 0, 5);
  CHECK(q.quadratic.count({0, 2}) == 1);
  q.add_quadratic(0, 2, -5);
  CHECK(q.quadratic.empty());
  q.add_linear(1, 4);
  q.add_linear(1, -4);
  CHECK(q.linear.empty());
  CHECK_THROWS_AS(q.add_quadratic(1, 1, 3), ValidationError);
}

TEST_CASE("fixing variables folds them into offset and linear") {
  // 3 x0 + 2 x0 x1 with x0 = 1 leaves 3 + 2 x1.
  Qubo q;
  q.n_vars = 2;
  q.add_linear(0, 3);
  q.add_quadratic(0, 1, 2);
  const ReducedQubo red = fix_variables(q, {{0, 1}});
  CHECK(red.qubo.n_vars == 1);
  CHECK(red.qubo.offset == 3);
  CHECK(red.qubo.linear.at(0) == 2);
  CHECK(red.qubo.quadratic.empty());
  CHECK(red.kept == std::vector<VarId>{1});

  const ReducedQubo zero = fix_variables(q, {{0, 0}});
  CHECK(zero.qubo.offset == 0);
  CHECK(zero.qubo.linear.empty());
}

TEST_CASE("fixing everything leaves a constant") {
  Qubo q;
  q.n_vars = 2;
  q.add_linear(0, 1);
  q.add_quadratic(0, 1, 1);
  const ReducedQubo red = fix_variables(q, {{0, 1}, {1, 1}});
  CHECK(red.qubo.n_vars == 0);
  CHECK(red.qubo.offset == 2);
  CHECK(red.kept.empty());
  CHECK(red.qubo.energy(Assignment::zeros(0)) == 2);
}

TEST_CASE("fix rejects bad ids") {
  Qubo q;
  q.n_vars = 2;
  CHECK_THROWS_AS(fix_variables(q, {{5, 1}}), ValidationError);
}

TEST_CASE("reduction preserves energies pointwise") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 5);
    const Qubo q = random_qubo(rng, n);
    PartialAssignment fixed;
    for (VarId v = 0; v < n; ++v)
      if (rng() % 3 == 0) fixed[v] = static_cast<std::uint8_t>(rng() & 1);
    const ReducedQubo red = fix_variables(q, fixed);
    REQUIRE(red.kept.size() == n - fixed.size());

    const std::uint32_t r = static_cast<std::uint32_t>(red.kept.size());
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      const Assignment sub = testing::from_mask(mask, r);
      const Assignment full = complete_assignment(n, fixed, red.kept, sub);
      for (const auto& [v, val] : fixed) CHECK(full[v] == val);
      CHECK(red.qubo.energy(sub) == q.energy(full));
    }
  }
}

TEST_CASE("ising transform is exact and invertible") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 5);
    const Qubo q = random_qubo(rng, n);
    const IsingModel m = to_ising(q);
    CHECK(from_ising(m) == q);

    // x = (1 - s) / 2 maps x = 0 to s = +1 and x = 1 to s = -1.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Assignment a = testing::from_mask(mask, n);
      std::vector<int> spins(n);
      for (std::uint32_t v = 0; v < n; ++v) spins[v] = a[v] ? -1 : 1;
      CHECK(m.energy(spins) == Rational(q.energy(a)));
    }
  }
}

TEST_CASE("ising rejects non-integer inversions") {
  IsingModel m;
  m.n_vars = 1;
  m.h[0] = Rational(1, 3);
  CHECK_THROWS_AS(from_ising(m), ValidationError);
}

TEST_CASE("text round trip is canonical") {
  std::mt19937_64 rng(47);
  const Qubo q = random_qubo(rng, 5);
  const std::string text = write_qubo(q);
  const QuboFile back = read_qubo(text);
  CHECK(back.qubo == q);
  CHECK(back.roles.empty());
  CHECK(write_qubo(back.qubo) == text);
}

TEST_CASE("role lines round trip") {
  Qubo q;
  q.n_vars = 3;
  q.add_linear(0, 1);
  VarRegistry roles = {VarRole::original(), VarRole::pair(0, 2),
                       VarRole::chain(1, 0)};
  const std::string text = write_qubo(q, &roles);
  const QuboFile back = read_qubo(text);
  REQUIRE(back.roles.size() == 3);
  CHECK(back.roles[1].kind == RoleKind::kPair);
  CHECK(back.roles[1].a == 0);
  CHECK(back.roles[1].b == 2);
  CHECK(write_qubo(back.qubo, &back.roles) == text);
}

TEST_CASE("reader rejects malformed input") {
  CHECK_THROWS_AS(read_qubo("0 0 1\n"), ParseError);        // missing header
  CHECK_THROWS_AS(read_qubo("qubo 2 0\n1 0 3\n"), ParseError);  // i > j
  CHECK_THROWS_AS(read_qubo("qubo 2 0\n0 5 3\n"), ParseError);  // out of range

  // Duplicate entries name the offending line.
  try {
    read_qubo("qubo 2 0\n0 1 3\n0 1 4\n");
    FAIL("expected duplicate error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  // A partial role registry is worse than none.
  CHECK_THROWS_AS(read_qubo("qubo 2 0\n# role 0 original\n0 0 1\n"),
                  ParseError);
  // Roles may not precede the header.
  CHECK_THROWS_AS(read_qubo("# role 0 original\nqubo 1 0\n"), ParseError);
}

TEST_CASE("unknown comments are ignored") {
  const QuboFile f = read_qubo("# made elsewhere\nqubo 1 2\n# note\n0 0 -1\n");
  CHECK(f.qubo.offset == 2);
  CHECK(f.qubo.linear.at(0) == -1);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(53);
  const Qubo q = random_qubo(rng, 4);
  VarRegistry roles = {VarRole::original(), VarRole::original(),
                       VarRole::reduction(0, 1), VarRole::gate(7)};
  const QuboFile back = qubo_from_json(qubo_to_json(q, &roles));
  CHECK(back.qubo == q);
  REQUIRE(back.roles.size() == 4);
  CHECK(back.roles[3].kind == RoleKind::kGate);
  CHECK(back.roles[3].a == 7);

  const QuboFile bare = qubo_from_json(qubo_to_json(q));
  CHECK(bare.qubo == q);
  CHECK(bare.roles.empty());
}

TEST_CASE("qubo sums merge term-wise") {
  Qubo a;
  a.n_vars = 2;
  a.add_linear(0, 1);
  a.add_quadratic(0, 1, 2);
  Qubo b;
  b.n_vars = 3;
  b.add_linear(0, -1);
  b.add_quadratic(1, 2, 4);
  const Qubo sum = a + b;
  CHECK(sum.n_vars == 3);
  CHECK(sum.linear.empty());
  CHECK(sum.quadratic.at({0, 1}) == 2);
  CHECK(sum.quadratic.at({1, 2}) == 4);
}

TEST_CASE("var role text forms") {
  CHECK(VarRole::original().to_string() == "original");
  CHECK(VarRole::pair(1, 2).to_string() == "pair 1 2");
  CHECK(VarRole::chain(0, 3).to_string() == "chain 0 3");
  CHECK(VarRole::reduction(4, 5).to_string() == "reduction 4 5");
  CHECK(VarRole::gate(9).to_string() == "gate 9");
  CHECK(VarRole::output(1, 2).to_string() == "output 1 2");
  for (const char* text :
       {"original", "pair 1 2", "chain 0 3", "reduction 4 5", "gate 9",
        "output 1 2"}) {
    CHECK(VarRole::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(VarRole::parse("pair 1"), ValidationError);
  CHECK_THROWS_AS(VarRole::parse("widget 1 2"), ValidationError);
}
