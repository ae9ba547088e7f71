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
#include "picard/level_groups.hpp"
#include "picard/rng.hpp"

using picard::Int;
using picard::Level;
using picard::LevelElement;
using picard::RatMatrix;
using picard::Rat;

namespace {

const Level kAll[] = {Level::kK, Level::kKPrime, Level::kV, Level::kK0, Level::kK1, Level::kV0, Level::kV1};

RatMatrix elementary(std::size_t i, std::size_t j, const Rat& v) {
  RatMatrix m = RatMatrix::identity(3);
  m(i, j) += v;
  return m;
}

}  // namespace

TEST_CASE("identity lies in every level group") {
  for (Level l : kAll)
    for (int r = 0; r <= 3; ++r) CHECK(picard::member(l, LevelElement{}, 3, r));
  CHECK(picard::parse_level("K'") == Level::kKPrime);
  CHECK(picard::to_string(Level::kV1) == "V1");
  CHECK_THROWS(picard::parse_level("W"));
}

TEST_CASE("membership congruences") {
  const std::int64_t p = 3;
  for (int r = 1; r <= 3; ++r) {
    const Rat p2r = picard::rpow(Rat(p), 2 * r);
    CHECK(picard::member(Level::kK, elementary(0, 2, p2r), p, r));
    CHECK_FALSE(picard::member(Level::kK, elementary(0, 2, p2r / p), p, r));
    RatMatrix mid = RatMatrix::identity(3);
    mid(1, 1) = 1 + picard::rpow(Rat(p), r);
    CHECK(picard::member(Level::kK, mid, p, r));
    CHECK_FALSE(picard::member(Level::kK1, mid, p, r));
    mid(1, 1) = 1 + p2r;
    CHECK(picard::member(Level::kK1, mid, p, r));
    // Lower entries are unconstrained in K_r, upper ones are not.
    CHECK(picard::member(Level::kK, elementary(2, 0, 5), p, r));
    CHECK_FALSE(picard::member(Level::kK, elementary(0, 1, 1), p, r));
    CHECK(picard::member(Level::kK0, elementary(0, 2, picard::rpow(Rat(p), r)), p, r));
    // V_r has the transposed shape.
    CHECK(picard::member(Level::kV, elementary(0, 1, 7), p, r));
    CHECK_FALSE(picard::member(Level::kV, elementary(1, 0, 1), p, r));
  }
  RatMatrix singular = RatMatrix::identity(3);
  singular(0, 0) = 3;
  CHECK_FALSE(picard::member(Level::kK0, singular, 3, 1));
  CHECK_FALSE(picard::member(Level::kK0, elementary(2, 0, Rat(1, 3)), 3, 1));
  CHECK(picard::member(Level::kK0, elementary(2, 0, Rat(1, 2)), 3, 1));
  CHECK_FALSE(picard::member(Level::kK, LevelElement{RatMatrix::identity(3), 3}, 3, 1));
}

TEST_CASE("tau conjugation") {
  RatMatrix g(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g(i, j) = static_cast<long>(3 * i + j + 1);
  CHECK(picard::conj_tau(g, 5, 0) == g);
  CHECK(picard::conj_tau(elementary(0, 2, 1), 3, 1)(0, 2) == Rat(1, 9));
  const RatMatrix tau = picard::tau_matrix(2);
  for (int r = 1; r <= 3; ++r) {
    RatMatrix t = RatMatrix::identity(3);
    for (int i = 0; i < r; ++i) t = t * tau;
    CHECK(picard::conj_tau(g, 2, r) == picard::inverse(t) * g * t);
    CHECK(picard::conj_tau(picard::conj_tau(g, 2, r), 2, -r) == g);
  }
  // Integrality of the tau^r-conjugate is exactly the b, c, f part of K_r.
  std::mt19937_64 rng = picard::make_rng(1);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t p = 2 + 3 * (i % 2);
    const int r = 1 + i % 3;
    LevelElement e = picard::random_member(Level::kK0, p, r, rng);
    const RatMatrix c = picard::conj_tau(e.g, p, r);
    bool integral = true;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) integral = integral && picard::is_p_integral(c(a, b), p);
    RatMatrix e_fixed = e.g;
    e_fixed(1, 1) = 1;  // drop the mirabolic condition
    CHECK(integral == picard::member(Level::kK, e_fixed, p, r));
  }
}

TEST_CASE("gamma_r identities") {
  for (std::int64_t p : {2, 3, 5})
    for (int r = 1; r <= 3; ++r) {
      auto rep = picard::verify_gamma(p, r, 300, 11);
      CHECK(rep.cube);
      CHECK(rep.cube_prime);
      CHECK(rep.tau);
      CHECK(rep.tau_prime);
      CHECK(rep.k1_preserved == 300);
      CHECK(rep.v1_preserved == 300);
      CHECK(rep.ok());
    }
  CHECK_THROWS(picard::verify_gamma(3, 0, 1, 1));
}

TEST_CASE("sampled members belong to their group") {
  std::mt19937_64 rng = picard::make_rng(2);
  for (Level l : kAll)
    for (std::int64_t p : {2, 3, 5})
      for (int r = 1; r <= 3; ++r)
        for (int i = 0; i < 30; ++i) CHECK(picard::member(l, picard::random_member(l, p, r, rng), p, r));
}

TEST_CASE("level inclusions") {
  for (std::int64_t p : {2, 3, 5})
    for (int r = 1; r <= 3; ++r) {
      CHECK(picard::check_inclusion(Level::kK, r + 1, Level::kKPrime, r, p, 500, 3).failures == 0);
      CHECK(picard::check_inclusion(Level::kKPrime, r, Level::kK, r, p, 500, 3).failures == 0);
      CHECK(picard::check_inclusion(Level::kK1, r, Level::kK, r, p, 500, 3).failures == 0);
      CHECK(picard::check_inclusion(Level::kK, r, Level::kK0, r, p, 500, 3).failures == 0);
      CHECK(picard::check_kprime_intersection(p, r, 500, 3).failures == 0);
    }
  // The reverse inclusion fails, so the sampler is not degenerate.
  CHECK(picard::check_inclusion(Level::kK, 1, Level::kKPrime, 1, 3, 200, 3).failures > 0);
}

TEST_CASE("normality fails for the literal congruence description") {
  // Explicit witness: n = 1 + E21 in K^1_r, g = 1 + p^r E12 in K_r; the
  // conjugate has diagonal 1 + p^r, 1 - p^r.
  for (std::int64_t p : {2, 3, 5})
    for (int r = 1; r <= 3; ++r) {
      const Rat pr = picard::rpow(Rat(p), r);
      RatMatrix n = elementary(1, 0, 1);
      RatMatrix g = elementary(0, 1, pr);
      REQUIRE(picard::member(Level::kK1, n, p, r));
      REQUIRE(picard::member(Level::kK, g, p, r));
      RatMatrix c = g * n * picard::inverse(g);
      CHECK(c(0, 0) == 1 + pr);
      CHECK_FALSE(picard::member(Level::kK1, c, p, r));
      auto rep = picard::check_normality(Level::kK1, Level::kK, p, r, 200, 5);
      CHECK(rep.failures > 0);
      REQUIRE(rep.n.has_value());
      CHECK_FALSE(picard::member(Level::kK1, rep.g->g * rep.n->g * picard::inverse(rep.g->g), p, r));
    }
  // K_r in K^0_r: c = 0 mod p^2r is not preserved. With n = diag(2, 1, 1)
  // and g = 1 + p^r E13 the conjugate has c = -p^r.
  const std::int64_t p = 3;
  const int r = 1;
  RatMatrix n = RatMatrix::identity(3);
  n(0, 0) = 2;
  RatMatrix g = elementary(0, 2, 3);
  REQUIRE(picard::member(Level::kK, n, p, r));
  REQUIRE(picard::member(Level::kK0, g, p, r));
  CHECK((g * n * picard::inverse(g))(0, 2) == -3);
  CHECK_FALSE(picard::member(Level::kK, g * n * picard::inverse(g), p, r));
  // The gamma-normalized subgroup is stable under itself.
  CHECK(picard::check_normality(Level::kK1, Level::kK1, 3, 2, 200, 5).failures == 0);
}

TEST_CASE("u^-1 Q_H^0 u meets the opposite Borel trivially") {
  const picard::FieldCtx k = picard::FieldCtx::make(11);
  const picard::QuadInt varpi = picard::default_varpi(k, 3);
  CHECK(k.norm(varpi) == 3);
  const auto roots = picard::omega_embeddings(k, 3, 5);
  REQUIRE(roots.size() == 2);
  for (std::int64_t w : roots) CHECK((w * w - w + 3) % 243 == 0);

  // Closed form at the identity and at b = 1.
  auto id = picard::lemma46_conjugate(1, 0, 1, 5, 7, 243);
  CHECK(id == std::vector<std::int64_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  auto b1 = picard::lemma46_conjugate(1, 1, 1, 5, 7, 243);
  CHECK(b1[1] == 1);

  picard::Lemma46Options o;
  auto rep = picard::lemma46_check(k, o);
  CHECK(rep.iota_varpi % 3 == 0);
  CHECK(rep.checked == 162ull * 243ull * 162ull);
  CHECK(rep.holds());
  // A second generator of the other prime above 3, with its own embedding.
  o.varpi = k.conj(varpi);
  auto rep2 = picard::lemma46_check(k, o);
  CHECK(rep2.iota_omega != rep.iota_omega);
  CHECK(rep2.holds());
  // A unit multiple of varpi.
  o.varpi = picard::QuadInt{-varpi.a, -varpi.b};
  CHECK(picard::lemma46_check(k, o).holds());

  // With varpi a unit under the embedding, delta - varpi may fall in pZ_p and
  // the intersection grows: here delta = varpi mod 3.
  o.varpi = varpi;
  o.omega_residue = rep2.iota_omega % 3;
  auto bad = picard::lemma46_check(k, o);
  CHECK((bad.iota_delta - bad.iota_varpi) % 3 == 0);
  CHECK_FALSE(bad.holds());
  CHECK(bad.solution_count > 1);
  for (const auto& sol : bad.solutions) {
    auto m = picard::lemma46_conjugate(sol.a, sol.b, sol.x, bad.iota_delta, bad.iota_varpi, 243);
    CHECK(m[1] == 0);
    CHECK(m[2] == 0);
    CHECK(m[5] == 0);
  }
}
