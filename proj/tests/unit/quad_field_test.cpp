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
#include "oracles.hpp"
#include "picard/quad_field.hpp"

#include <random>

using picard::FieldCtx;
using picard::Int;
using picard::QuadInt;
using picard::SplitType;

TEST_CASE("field construction") {
  FieldCtx k7 = FieldCtx::make(7);
  CHECK(k7.disc() == -7);
  CHECK(k7.half_integral_basis());
  CHECK(k7.omega() == picard::KElem{picard::Rat(1, 2), picard::Rat(1, 2)});
  FieldCtx k1 = FieldCtx::make(1);
  CHECK(k1.disc() == -4);
  CHECK_FALSE(k1.half_integral_basis());
  CHECK_THROWS_AS(FieldCtx::make(12), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(0), std::invalid_argument);
  for (std::int64_t d : {1, 2, 3, 5, 6, 7, 11, 19, 43}) {
    FieldCtx k = FieldCtx::make(d);
    std::int64_t r = ((k.disc() % 4) + 4) % 4;
    CHECK((r == 0 || r == 1));
    CHECK((k.abs_disc() == d || k.abs_disc() == 4 * d));
  }
}

TEST_CASE("norms of small elements for D = 7") {
  FieldCtx k = FieldCtx::make(7);
  CHECK(k.norm(QuadInt{1, 0}) == 1);
  CHECK(k.norm(QuadInt{0, 1}) == 2);
  CHECK(k.norm(QuadInt{1, 1}) == 4);
  // |1 + w|^2 with w = (1 + i sqrt 7)/2 evaluated in floating point.
  double re = 1.5, im = std::sqrt(7.0) / 2;
  CHECK(re * re + im * im == doctest::Approx(4.0));
}

TEST_CASE("norm and conjugation are multiplicative") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (std::int64_t d : {1, 2, 3, 7, 11}) {
    FieldCtx k = FieldCtx::make(d);
    for (int i = 0; i < 1000; ++i) {
      QuadInt x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)};
      CHECK(k.norm(k.mul(x, y)) == k.norm(x) * k.norm(y));
      CHECK(k.conj(k.mul(x, y)) == k.mul(k.conj(x), k.conj(y)));
      CHECK(k.conj(k.conj(x)) == x);
      CHECK(k.norm(x) >= 0);
      if (k.norm(x) == 0) CHECK(x == QuadInt{0, 0});
      // embed is a ring map into K
      CHECK(k.embed(k.mul(x, y)) == k.mul(k.embed(x), k.embed(y)));
    }
  }
}

TEST_CASE("chi examples for D = 7") {
  FieldCtx k = FieldCtx::make(7);
  CHECK(k.chi(1) == 1);
  CHECK(k.chi(7) == 0);
  CHECK(oracle::square_root_count(-7, 11) > 0);
  CHECK(k.chi(11) == 1);
}

TEST_CASE("chi matches the root-count oracle up to 10^4") {
  for (std::int64_t d : {3, 7, 11}) {
    FieldCtx k = FieldCtx::make(d);
    for (std::int64_t n = 1; n <= 10000; ++n) {
      if (std::gcd(n, k.abs_disc()) != 1) {
        CHECK(k.chi(n) == 0);
        continue;
      }
      REQUIRE(k.chi(n) == oracle::chi_by_roots(k.disc(), n));
    }
    // period |disc| and complete multiplicativity
    for (std::int64_t n = 1; n <= 300; ++n) {
      CHECK(k.chi(n) == k.chi(n + k.abs_disc()));
      for (std::int64_t m = 1; m <= 30; ++m) CHECK(k.chi(n * m) == k.chi(n) * k.chi(m));
    }
  }
}

TEST_CASE("split type agrees with factoring the minimal polynomial of w") {
  for (std::int64_t d : {1, 2, 3, 7, 11, 19}) {
    FieldCtx k = FieldCtx::make(d);
    const std::int64_t t = k.omega_trace().get_si();
    const std::int64_t nrm = k.omega_norm().get_si();
    for (std::int64_t p = 2; p < 200; ++p) {
      if (!picard::is_prime(p)) continue;
      int roots = oracle::quadratic_root_count(t, nrm, p);
      SplitType s = k.split_type(p);
      CHECK((s == SplitType::kSplit) == (roots == 2));
      CHECK((s == SplitType::kRamified) == (roots == 1));
    }
  }
  FieldCtx k7 = FieldCtx::make(7);
  CHECK(k7.split_type(7) == SplitType::kRamified);
  CHECK(k7.split_type(11) == SplitType::kSplit);
  CHECK(k7.split_type(3) == SplitType::kInert);
  CHECK_THROWS(k7.split_type(9));
}
