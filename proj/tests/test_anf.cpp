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
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mqanneal/anf.hpp"

using namespace mqanneal;

TEST_CASE("monomial ordering is degree first, then lexicographic") {
  std::vector<Monomial> ms = {Monomial::pair(0, 1), Monomial::var(3),
                              Monomial::one(), Monomial::pair(0, 2),
                              Monomial::var(0)};
  std::sort(ms.begin(), ms.end());
  CHECK(ms[0] == Monomial::one());
  CHECK(ms[1] == Monomial::var(0));
  CHECK(ms[2] == Monomial::var(3));
  CHECK(ms[3] == Monomial::pair(0, 1));
  CHECK(ms[4] == Monomial::pair(0, 2));
}

TEST_CASE("monomial product removes duplicates and sorts") {
  const Monomial m = Monomial::product({3, 1, 3, 1});
  CHECK(m.vars() == std::vector<VarId>{1, 3});
  CHECK(m.degree() == 2);
  CHECK(m.var_span() == 4);
  CHECK(Monomial::pair(2, 0) == Monomial::pair(0, 2));
  CHECK(m.merged(Monomial::var(2)) == Monomial::product({1, 2, 3}));
  CHECK(Monomial::product({0, 1, 2}).without(0, 2) == Monomial::var(1));
}

TEST_CASE("anf toggling cancels in pairs") {
  AnfPoly p;
  p.toggle(Monomial::var(0));
  p.toggle(Monomial::pair(0, 1));
  p.toggle(Monomial::var(0));
  CHECK(p.term_count() == 1);
  CHECK(p.contains(Monomial::pair(0, 1)));
  CHECK_FALSE(p.contains(Monomial::var(0)));
  p.toggle(Monomial::pair(0, 1));
  CHECK(p.is_zero());
  CHECK(p.degree() == 0);
  CHECK(p.var_span() == 0);
}

TEST_CASE("evaluation of the reference system") {
  const MQSystem s = testing::reference_system();
  REQUIRE(s.polys.size() == 4);
  CHECK(s.polys[0].term_count() == 9);
  CHECK(s.polys[1].term_count() == 5);
  CHECK(s.polys[2].term_count() == 6);
  CHECK(s.polys[3].term_count() == 4);

  // The last polynomial is x1*x3 + x2*x4 + x4 + 1.
  CHECK(eval_poly(s.polys[3], Assignment::from_string("1111")) == 0);
  CHECK(eval_poly(s.polys[3], Assignment::from_string("0000")) == 1);
  CHECK(eval_poly(s.polys[3], Assignment::from_string("1010")) == 0);

  const Assignment sol = Assignment::from_string("0011");
  CHECK(is_solution(s, sol));
  CHECK(eval_system(s, sol) == std::vector<std::uint8_t>{0, 0, 0, 0});
  // At all-ones each polynomial evaluates to its term count mod 2:
  // 9, 5, 6 and 4 terms respectively.
  const auto residuals = eval_system(s, Assignment::from_string("1111"));
  CHECK(residuals == std::vector<std::uint8_t>{1, 1, 0, 0});
}

TEST_CASE("eval rejects short assignments") {
  AnfPoly p;
  p.toggle(Monomial::var(5));
  CHECK_THROWS_AS(p.eval(Assignment::zeros(3)), DimensionError);
}

TEST_CASE("brute force finds exactly the two reference solutions") {
  const auto sols = brute_force_solutions(testing::reference_system());
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].to_string() == "0011");
  CHECK(sols[1].to_string() == "1010");
}

TEST_CASE("brute force is independent of the thread count") {
  const auto planted = generate_planted(10, 6, 99);
  const auto one = brute_force_solutions(planted.system, 1);
  const auto four = brute_force_solutions(planted.system, 4);
  CHECK(one == four);
  CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("brute force refuses systems above the variable cap") {
  MQSystem s;
  s.n_vars = kBruteForceVarLimit + 1;
  s.polys.emplace_back();
  CHECK_THROWS_AS(brute_force_solutions(s), ValidationError);
}

TEST_CASE("planted instances are valid, solvable and reproducible") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    const auto planted = generate_planted(6, 5, seed);
    planted.system.validate();
    CHECK(planted.system.polys.size() == 5);
    CHECK(planted.solution.size() == 6);
    CHECK(is_solution(planted.system, planted.solution));
    const auto sols = brute_force_solutions(planted.system);
    CHECK(std::binary_search(sols.begin(), sols.end(), planted.solution));

    const auto again = generate_planted(6, 5, seed);
    CHECK(again.solution == planted.solution);
    CHECK(format_system(again.system) == format_system(planted.system));
  }
  // Different seeds should give different instances almost surely.
  CHECK(format_system(generate_planted(8, 8, 1).system) !=
        format_system(generate_planted(8, 8, 2).system));
}

TEST_CASE("parse and format round trip") {
  const std::string text =
      "vars 3\n"
      "# a comment line\n"
      "x1*x2 + x3 + 1\n"
      "\n"
      "0\n"
      "x2 + x2*x3  # trailing comment\n";
  const MQSystem s = parse_system(text);
  REQUIRE(s.polys.size() == 3);
  CHECK(s.n_vars == 3);
  CHECK(s.polys[1].is_zero());
  CHECK(s.polys[2].contains(Monomial::var(1)));
  CHECK(s.polys[2].contains(Monomial::pair(1, 2)));

  const std::string out = format_system(s);
  CHECK(parse_system(out).polys == s.polys);
  CHECK(format_system(parse_system(out)) == out);
}

TEST_CASE("format orders terms with quadratic before linear, constant last") {
  const MQSystem s = testing::reference_system();
  const std::string out = format_system(s);
  CHECK(out ==
        "vars 4\n"
        "x1*x2 + x1*x3 + x1*x4 + x1 + x2*x3 + x2*x4 + x2 + x3*x4 + x4\n"
        "x1*x2 + x1*x3 + x2 + x3*x4 + x3\n"
        "x1*x2 + x1*x3 + x2*x3 + x2 + x3 + x4\n"
        "x1*x3 + x2*x4 + x4 + 1\n");
}

TEST_CASE("parser normalises unsorted pairs and squares") {
  const MQSystem s = parse_system("vars 3\nx3*x1 + x2*x2\n");
  CHECK(s.polys[0].contains(Monomial::pair(0, 2)));
  CHECK(s.polys[0].contains(Monomial::var(1)));
  // Repeated terms cancel over F2.
  CHECK(parse_system("vars 2\nx1 + x1\n").polys[0].is_zero());
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_AS(parse_system("x1 + x2\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars 0\nx1\n"), ParseError);

  try {
    parse_system("vars 2\nx1 + x3\n");
    FAIL("expected range error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }

  try {
    parse_system("vars 2\nx1\nx1 + y2\n");
    FAIL("expected term error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("validate rejects out-of-range variables and high degree") {
  MQSystem s;
  s.n_vars = 2;
  AnfPoly p;
  p.toggle(Monomial::var(2));
  s.polys.push_back(p);
  CHECK_THROWS_AS(s.validate(), ValidationError);

  MQSystem cubic;
  cubic.n_vars = 3;
  AnfPoly q;
  q.toggle(Monomial::product({0, 1, 2}));
  cubic.polys.push_back(q);
  CHECK_THROWS_AS(cubic.validate(), ValidationError);
}

TEST_CASE("assignment string parsing is strict") {
  CHECK(Assignment::from_string("0101").to_string() == "0101");
  CHECK_THROWS_AS(Assignment::from_string("01x1"), ParseError);
  CHECK(Assignment::from_string("").size() == 0);
}

TEST_CASE("xor of polynomials is pointwise xor of evaluations") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 5);
    auto random_poly = [&] {
      AnfPoly p;
      const int terms = 1 + static_cast<int>(rng() % 6);
      for (int t = 0; t < terms; ++t) {
        const int kind = static_cast<int>(rng() % 3);
        if (kind == 0) {
          p.toggle(Monomial::one());
        } else if (kind == 1) {
          p.toggle(Monomial::var(static_cast<VarId>(rng() % n)));
        } else {
          const VarId i = static_cast<VarId>(rng() % n);
          const VarId j = static_cast<VarId>(rng() % n);
          p.toggle(i == j ? Monomial::var(i) : Monomial::pair(i, j));
        }
      }
      return p;
    };
    const AnfPoly f = random_poly();
    const AnfPoly g = random_poly();
    const AnfPoly sum = f + g;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Assignment a = testing::from_mask(mask, n);
      CHECK(sum.eval(a) == (f.eval(a) ^ g.eval(a)));
    }
  }
}
