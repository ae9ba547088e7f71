// Copyright 2026 The picard-cycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "doctest.h"
#include "picard/arith.hpp"
#include "picard/linalg.hpp"

#include <random>

using picard::Int;
using picard::Rat;

TEST_CASE("rational text round trip") {
  CHECK(picard::to_string(Rat(-6, 4)) == "-6/4");  // not canonical on purpose
  Rat q = picard::parse_rational("-6/4");
  CHECK(picard::to_string(q) == "-3/2");
  CHECK(picard::parse_rational("17") == 17);
  CHECK_THROWS(picard::parse_rational("1/0"));
  CHECK_THROWS(picard::parse_integer("x1"));
}

TEST_CASE("modular helpers") {
  CHECK(picard::mod(Int(-3), Int(7)) == 4);
  CHECK(picard::pow_mod(Int(3), -1, Int(7)) == 5);
  CHECK(picard::rat_mod(Rat(1, 2), Int(11)) == 6);
  CHECK_THROWS_AS(picard::inverse_mod(Int(4), Int(8)), std::domain_error);
  CHECK(picard::valuation(Int(250), 5) == 3);
  Rat r;
  CHECK(picard::exact_sqrt(Rat(9, 49), &r));
  CHECK(r == Rat(3, 7));
  CHECK_FALSE(picard::exact_sqrt(Rat(2), &r));
}

TEST_CASE("squarefree and primality") {
  CHECK(picard::is_squarefree(7));
  CHECK_FALSE(picard::is_squarefree(12));
  CHECK(picard::is_prime(11));
  CHECK_FALSE(picard::is_prime(1));
}

TEST_CASE("inverse and determinant agree") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    picard::RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = picard::ratio(dist(rng), 1 + (dist(rng) + 9) % 3);
    if (picard::determinant(m) == 0) continue;
    CHECK(m * picard::inverse(m) == picard::RatMatrix::identity(4));
    CHECK(picard::determinant(m) * picard::determinant(picard::inverse(m)) == 1);
  }
}

TEST_CASE("hermite normal form is canonical under unimodular row operations") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    picard::IntMatrix m(5, 3);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = dist(rng);
    picard::IntMatrix u = m;
    // Elementary operations: add multiples, swap, negate.
    for (int s = 0; s < 10; ++s) {
      std::size_t i = static_cast<std::size_t>(rng() % 5), j = static_cast<std::size_t>(rng() % 5);
      if (i == j) continue;
      int f = dist(rng);
      for (std::size_t c = 0; c < 3; ++c) u(i, c) += f * u(j, c);
    }
    for (std::size_t c = 0; c < 3; ++c) std::swap(u(0, c), u(4, c));
    for (std::size_t c = 0; c < 3; ++c) u(2, c) = -u(2, c);
    CHECK(picard::hermite_normal_form(m) == picard::hermite_normal_form(u));
  }
}
