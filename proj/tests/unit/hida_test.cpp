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
#include "picard/hida.hpp"
#include "picard/rng.hpp"

#include <random>

using picard::ArithPoint;
using picard::FieldCtx;
using picard::Int;
using picard::IntMatrix;
using picard::IwasawaFn;
using picard::LambdaFamily;
using picard::PadicCtx;
using picard::QExpansion;
using picard::Rat;

namespace {

IntMatrix diag(std::initializer_list<long> entries) {
  IntMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (long e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

// Number of eigenvalues of A that are p-adic units: d minus the order of
// vanishing of det(x - A) at x = 0 mod p.
std::int64_t unit_eigenvalue_count(const IntMatrix& a, std::int64_t p) {
  oracle::IntRows rows(a.rows(), std::vector<Int>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  std::vector<Int> cp = oracle::charpoly_mod(rows, Int(static_cast<long>(p)));
  std::size_t zero_order = 0;
  while (zero_order < cp.size() && cp[zero_order] == 0) ++zero_order;
  return static_cast<std::int64_t>(a.rows() - zero_order);
}

}  // namespace

TEST_CASE("PadicCtx validation") {
  FieldCtx k = FieldCtx::make(7);
  CHECK(PadicCtx::make(11, 3, k).modulus() == 1331);
  CHECK(PadicCtx::make(2, 5, k).modulus() == 32);
  CHECK_THROWS(PadicCtx::make(3, 3, k));  // inert
  CHECK_THROWS(PadicCtx::make(7, 3, k));  // ramified
  CHECK_THROWS(PadicCtx::make(9, 3));
  CHECK_THROWS(PadicCtx::make(5, 0));
  PadicCtx c = PadicCtx::make(5, 4);
  CHECK(ArithPoint{3}.gamma_value(c) == 216);
  CHECK(ArithPoint{0}.gamma_value(c) == 1);
}

TEST_CASE("ordinary projector examples") {
  PadicCtx c = PadicCtx::make(5, 8);
  auto id = picard::ordinary_projector(picard::make_model(c, IntMatrix::identity(3)));
  CHECK(id.e == IntMatrix::identity(3));
  CHECK(id.rank == 3);
  auto nil = picard::ordinary_projector(picard::make_model(c, diag({5, 5, 5})));
  CHECK(nil.e == IntMatrix(3, 3));
  CHECK(nil.rank == 0);
  auto mixed = picard::ordinary_projector(picard::make_model(c, diag({3, 5 * 7})));
  CHECK(mixed.e == diag({1, 0}));
  CHECK(mixed.rank == 1);
  CHECK_THROWS(picard::make_model(c, IntMatrix(2, 3)));
  CHECK_THROWS(picard::make_model(c, IntMatrix::identity(2), {"only one"}));
}

TEST_CASE("ordinary projector is an idempotent commuting with A") {
  std::mt19937_64 rng = picard::make_rng(17, 1);
  const std::int64_t primes[] = {2, 3, 5, 11};
  int models = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t p = primes[trial % 4];
    const int precision = 1 + static_cast<int>(rng() % 12);
    const std::size_t d = 1 + rng() % 8;
    PadicCtx c = PadicCtx::make(p, precision);
    IntMatrix a(d, d);
    std::uniform_int_distribution<long> entry(-1000, 1000);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) = entry(rng);
    // Push some columns into pZ_p to get a non-trivial slope decomposition.
    for (std::size_t j = 0; j < d; ++j)
      if (rng() % 3 == 0)
        for (std::size_t i = 0; i < d; ++i) a(i, j) *= p;
    auto model = picard::make_model(c, a);
    auto r = picard::ordinary_projector(model);
    const Int& m = c.modulus();
    CHECK(picard::mat_mul_mod(r.e, r.e, m) == r.e);
    CHECK(picard::mat_mul_mod(r.e, model.matrix, m) == picard::mat_mul_mod(model.matrix, r.e, m));
    CHECK(r.rank == unit_eigenvalue_count(a, p));
    ++models;
  }
  CHECK(models == 200);
}

TEST_CASE("gl_order") {
  CHECK(picard::gl_order(1, 5) == 4);
  CHECK(picard::gl_order(2, 2) == 6);
  CHECK(picard::gl_order(2, 3) == 48);
}

TEST_CASE("eisenstein family examples") {
  FieldCtx k = FieldCtx::make(7);
  PadicCtx c = PadicCtx::make(11, 20, k);
  LambdaFamily f = picard::eisenstein_family(k, c, 300);
  for (std::int64_t kk : {2, 3, 4, 10, 57}) {
    QExpansion s = picard::specialize(f, ArithPoint{kk}, 300);
    CHECK(s[1] == 1);
    CHECK(s[11] == 1);
    CHECK(s[0] == 0);
    CHECK(s.weight() == kk);
    CHECK(s.level() == 77);
    CHECK(s.character_disc() == -7);
  }
  CHECK(picard::specialize(f, ArithPoint{3}, 10)[2] == 5);
  CHECK_THROWS(picard::eisenstein_family(k, PadicCtx::make(5, 3), 10));
  CHECK_THROWS(picard::specialize(f, ArithPoint{3}, 301));
}

TEST_CASE("weight-3 specialization is the p-deprived eisenstein3") {
  for (std::int64_t d : {7, 3, 11}) {
    FieldCtx k = FieldCtx::make(d);
    std::int64_t p = 2;
    while (!picard::is_prime(p) || k.split_type(p) != picard::SplitType::kSplit) ++p;
    PadicCtx c = PadicCtx::make(p, 20, k);
    const std::int64_t n_terms = 500;
    QExpansion s = picard::specialize(picard::eisenstein_family(k, c, n_terms), ArithPoint{3}, n_terms);
    QExpansion e = picard::eisenstein3(k, n_terms);
    const Rat euler = Rat(k.chi(p)) * p * p;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
      Rat deprived = e[n] - (n % p == 0 ? euler * e[n / p] : Rat(0));
      CHECK(s[n] == Rat(picard::rat_mod(deprived, c.modulus())));
      CHECK(s[n] == Rat(picard::mod(oracle::divisor_sum(k.disc(), n, 2, p), c.modulus())));
    }
  }
}

TEST_CASE("specializations are Hecke eigenforms mod p^M") {
  FieldCtx k = FieldCtx::make(7);
  std::mt19937_64 rng = picard::make_rng(5, 2);
  for (std::int64_t p : {2, 11, 23}) {
    PadicCtx c = PadicCtx::make(p, 12, k);
    LambdaFamily f = picard::eisenstein_family(k, c, 1300);
    for (int trial = 0; trial < 4; ++trial) {
      const std::int64_t kk = 2 + static_cast<std::int64_t>(rng() % 40);
      QExpansion s = picard::specialize(f, ArithPoint{kk}, 1300);
      for (std::int64_t l = 2; l <= 13; ++l) {
        if (!picard::is_prime(l) || l == p) continue;
        Rat eigen = 1 + k.chi(l) * picard::rpow(Rat(l), static_cast<long>(kk - 1));
        QExpansion lhs = picard::hecke_T(s, l);
        QExpansion rhs = picard::scale(s, eigen).truncated(lhs.trunc());
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("interpolation congruences") {
  FieldCtx k = FieldCtx::make(7);
  PadicCtx c11 = PadicCtx::make(11, 20, k);
  LambdaFamily f = picard::eisenstein_family(k, c11, 200);
  CHECK(picard::congruence_check(f, 3, 3, 1, 200));
  CHECK(picard::congruence_check(f, 3, 3 + 10 * 11, 1, 200));
  CHECK_THROWS(picard::congruence_check(f, 3, 4, 1, 200));
  CHECK_THROWS(picard::congruence_check(f, 3, 3, 20, 200));

  LambdaFamily bad = f;
  bad.rules[5] = IwasawaFn::polynomial_k({Int(0), Int(1)});
  CHECK_FALSE(picard::congruence_check(bad, 3, 113, 1, 200));
  CHECK(picard::congruence_witness(bad, 3, 113, 1, 200) == 5);
  // Not detected below the corrupted index.
  CHECK(picard::congruence_check(bad, 3, 113, 1, 4));

  std::mt19937_64 rng = picard::make_rng(23, 3);
  for (std::int64_t p : {2, 11, 23}) {
    PadicCtx c = PadicCtx::make(p, 6, k);
    LambdaFamily g = picard::eisenstein_family(k, c, 120);
    for (int m = 0; m <= 3; ++m) {
      const std::int64_t period = (p - 1) * picard::ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(m)).get_si();
      for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t kk = 2 + static_cast<std::int64_t>(rng() % 50);
        const std::int64_t kp = kk + period * static_cast<std::int64_t>(1 + rng() % 5);
        CHECK(picard::congruence_check(g, kk, kp, m, 120));
      }
    }
  }
}

TEST_CASE("family scaling") {
  FieldCtx k = FieldCtx::make(7);
  PadicCtx c = PadicCtx::make(11, 10, k);
  LambdaFamily f = picard::eisenstein_family(k, c, 60);
  CHECK(picard::specialize(picard::scale_family(f, IwasawaFn()), ArithPoint{4}, 60) ==
        picard::specialize(f, ArithPoint{4}, 60));
  CHECK(picard::specialize(picard::scale_family(f, IwasawaFn::constant(7)), ArithPoint{4}, 60) ==
        picard::scale(picard::specialize(f, ArithPoint{4}, 60), 7));
  IwasawaFn t = IwasawaFn::polynomial_t({Int(0), Int(1)});
  CHECK(picard::specialize(picard::scale_family(f, t), ArithPoint{0}, 60).is_zero());

  std::mt19937_64 rng = picard::make_rng(3, 4);
  std::uniform_int_distribution<long> coef(-50, 50);
  LambdaFamily bad = f;
  bad.rules[3] = IwasawaFn::polynomial_k({Int(1), Int(2), Int(3)});
  for (const LambdaFamily& fam : {f, bad, picard::scale_family(f, t)}) {
    for (int trial = 0; trial < 10; ++trial) {
      IwasawaFn lambda = IwasawaFn::polynomial_t({Int(coef(rng)), Int(coef(rng)), Int(coef(rng))}) *
                         IwasawaFn::constant(coef(rng));
      const std::int64_t kk = static_cast<std::int64_t>(rng() % 30);
      QExpansion lhs = picard::specialize(picard::scale_family(fam, lambda), ArithPoint{kk}, 60);
      QExpansion rhs = picard::scale(picard::specialize(fam, ArithPoint{kk}, 60), Rat(lambda.eval(c, kk)));
      CHECK(lhs == rhs);
    }
  }
}
