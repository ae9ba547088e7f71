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
#include "picard/herm_lattice.hpp"

#include <random>

using picard::FieldCtx;
using picard::HermLattice;
using picard::Int;
using picard::KElem;
using picard::KVec;
using picard::Rat;

namespace {

KVec vec(const FieldCtx& k, const picard::QuadInt& a, const picard::QuadInt& b,
         const picard::QuadInt& c) {
  return KVec{k.embed(a), k.embed(b), k.embed(c)};
}

HermLattice scaled_standard(const FieldCtx& k, const KElem& s) {
  std::vector<KVec> basis;
  const HermLattice std_lattice = picard::standard_lattice(k);
  for (const KVec& b : std_lattice.zbasis()) basis.push_back(picard::scale(k, s, b));
  return HermLattice::from_basis(k, basis);
}

std::vector<std::vector<Int>> int_rows(const picard::RatMatrix& m, const Int& scale) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * scale;
      REQUIRE(v.get_den() == 1);
      rows[i][j] = v.get_num();
    }
  return rows;
}

}  // namespace

TEST_CASE("standard lattice pairing matches J") {
  FieldCtx k = FieldCtx::make(7);
  using picard::unit_vector;
  CHECK(picard::hermitian(k, unit_vector(1), unit_vector(1)) == KElem{1, 0});
  CHECK(picard::hermitian(k, unit_vector(0), unit_vector(2)) == k.inv(k.delta()));
  CHECK(picard::hermitian(k, unit_vector(2), unit_vector(0)) == k.sub(KElem{0, 0}, k.inv(k.delta())));
  CHECK(picard::hermitian(k, unit_vector(0), unit_vector(0)) == KElem{0, 0});
  HermLattice l = picard::standard_lattice(k);
  CHECK(l.is_ok_stable());
  CHECK(l.is_integral());
  CHECK(l.gram() == l.gram().transpose());
}

TEST_CASE("hermitian form is sesquilinear and hermitian") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dist(-6, 6);
  FieldCtx k = FieldCtx::make(11);
  auto rnd = [&] { return KElem{picard::ratio(dist(rng), 1 + std::abs(dist(rng)) % 3), picard::ratio(dist(rng), 2)}; };
  for (int i = 0; i < 200; ++i) {
    KVec u{rnd(), rnd(), rnd()}, v{rnd(), rnd(), rnd()};
    KElem a = rnd();
    CHECK(picard::hermitian(k, v, u) == k.conj(picard::hermitian(k, u, v)));
    CHECK(picard::hermitian(k, u, picard::scale(k, a, v)) == k.mul(a, picard::hermitian(k, u, v)));
    CHECK(picard::hermitian(k, picard::scale(k, a, u), v) ==
          k.mul(k.conj(a), picard::hermitian(k, u, v)));
  }
}

TEST_CASE("dual lattice") {
  for (std::int64_t d : {1, 2, 3, 7, 11}) {
    FieldCtx k = FieldCtx::make(d);
    HermLattice l = picard::standard_lattice(k);
    HermLattice dual = picard::dual_lattice(l);
    CHECK(picard::same_span(picard::dual_lattice(dual), l));
    CHECK(dual.is_ok_stable());
    CHECK(dual.in_dual(picard::unit_vector(0)) == l.in_dual(picard::unit_vector(0)));
    for (const KVec& b : l.zbasis()) CHECK(dual.contains(b));
    CHECK(picard::same_span(l, l));
    CHECK_FALSE(picard::same_span(l, scaled_standard(k, KElem{2, 0})));
  }
  FieldCtx k7 = FieldCtx::make(7);
  CHECK(picard::standard_lattice(k7).in_dual(picard::unit_vector(1)));
}

TEST_CASE("dual index equals the Smith invariant product of the Gram matrix") {
  for (std::int64_t d : {3, 7, 2}) {
    FieldCtx k = FieldCtx::make(d);
    for (KElem s : {KElem{1, 0}, KElem{0, 1}, KElem{2, 1}}) {
      HermLattice l = scaled_standard(k, s);
      REQUIRE(l.is_integral());
      auto diag = oracle::smith_diagonal(int_rows(l.gram(), 1));
      REQUIRE(diag.size() == 6);
      Int prod = 1;
      for (const Int& x : diag) prod *= x;
      CHECK(picard::dual_index(l) == Rat(prod));
    }
  }
}

TEST_CASE("rank-one forms of the middle line") {
  FieldCtx k7 = FieldCtx::make(7);
  auto f7 = picard::rank_one(picard::standard_lattice(k7), picard::unit_vector(1));
  CHECK(f7.qa == 1);
  CHECK(f7.qb == 1);
  CHECK(f7.qc == 2);
  CHECK(f7.disc_lattice == 1);
  CHECK(f7.disc_dual == Rat(1, 7));
  FieldCtx k3 = FieldCtx::make(3);
  auto f3 = picard::rank_one(picard::standard_lattice(k3), picard::unit_vector(1));
  CHECK(f3.qa == 1);
  CHECK(f3.qb == 1);
  CHECK(f3.qc == 1);
  CHECK_THROWS_AS(picard::rank_one(picard::standard_lattice(k7), picard::unit_vector(0)),
                  std::invalid_argument);
}

TEST_CASE("count_norm small values for D = 7") {
  FieldCtx k = FieldCtx::make(7);
  auto f = picard::rank_one(picard::standard_lattice(k), picard::unit_vector(1));
  CHECK(picard::count_norm(f, 1) == 2);
  CHECK(picard::count_norm(f, 2) == 4);
  CHECK(picard::count_norm(f, 0) == 1);
  CHECK(picard::count_norm(f, 3) == 0);
}

TEST_CASE("rank-one sublattice is saturated and discriminants multiply to 1/|disc|") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::int64_t d : {1, 3, 7, 11}) {
    FieldCtx k = FieldCtx::make(d);
    HermLattice l = picard::standard_lattice(k);
    int done = 0;
    while (done < 15) {
      KVec w = vec(k, {dist(rng), dist(rng)}, {dist(rng), dist(rng)}, {dist(rng), dist(rng)});
      if (picard::hermitian(k, w, w).x <= 0) continue;
      ++done;
      auto f = picard::rank_one(l, w);
      CHECK(l.contains(f.gen1));
      CHECK(l.contains(f.gen2));
      CHECK(f.disc_lattice * f.disc_dual == Rat(1, k.abs_disc()));
      CHECK(f.qb >= 0);
      CHECK(f.qb <= f.qa);
      CHECK(f.qa <= f.qc);
      // Every small multiple x*w that lands in L is an integral combination.
      for (int m = 1; m <= 4; ++m)
        for (int i = -4; i <= 4; ++i)
          for (int j = -4; j <= 4; ++j) {
            KVec x = picard::scale(k, KElem{picard::ratio(i, m), picard::ratio(j, m)}, w);
            if (!l.contains(x)) continue;
            auto c1 = picard::rational_coordinates(f.gen1);
            auto c2 = picard::rational_coordinates(f.gen2);
            auto cx = picard::rational_coordinates(x);
            bool found = false;
            for (std::size_t r = 0; r < 6 && !found; ++r)
              for (std::size_t s = r + 1; s < 6 && !found; ++s) {
                Rat det = c1[r] * c2[s] - c1[s] * c2[r];
                if (det == 0) continue;
                Rat a = (cx[r] * c2[s] - cx[s] * c2[r]) / det;
                Rat b = (c1[r] * cx[s] - c1[s] * cx[r]) / det;
                CHECK(a.get_den() == 1);
                CHECK(b.get_den() == 1);
                found = true;
              }
            CHECK(found);
          }
    }
  }
}

TEST_CASE("bulk counts, per-n counts and box enumeration agree up to 10^4") {
  for (std::int64_t d : {1, 2, 3, 7, 11}) {
    FieldCtx k = FieldCtx::make(d);
    auto f = picard::rank_one(picard::standard_lattice(k), picard::unit_vector(1));
    REQUIRE(f.qa.get_den() == 1);
    REQUIRE(f.qb.get_den() == 1);
    REQUIRE(f.qc.get_den() == 1);
    const std::int64_t x = 10000;
    auto oracle_counts =
        oracle::box_counts(f.qa.get_num().get_si(), f.qb.get_num().get_si(), f.qc.get_num().get_si(), x);
    auto bulk = picard::representation_counts(f, x);
    std::int64_t cum_oracle = 0, cum_bulk = 0;
    for (std::int64_t n = 0; n <= x; ++n) {
      cum_oracle += oracle_counts[static_cast<std::size_t>(n)];
      cum_bulk += static_cast<std::int64_t>(bulk[static_cast<std::size_t>(n)]);
      REQUIRE(bulk[static_cast<std::size_t>(n)] == static_cast<std::uint64_t>(oracle_counts[static_cast<std::size_t>(n)]));
    }
    CHECK(cum_bulk == cum_oracle);
    for (std::int64_t n = 0; n <= 600; ++n)
      CHECK(picard::count_norm(f, n) == Int(static_cast<long>(oracle_counts[static_cast<std::size_t>(n)])));
  }
}

TEST_CASE("coset lattice counts") {
  FieldCtx k = FieldCtx::make(7);
  HermLattice l = scaled_standard(k, k.delta());
  KVec h = picard::unit_vector(1);
  auto coset = picard::CosetLattice::make(l, h);
  CHECK(coset.contains(h));
  CHECK_FALSE(coset.contains(picard::scale(k, KElem{2, 0}, h)));
  CHECK_THROWS_AS(picard::CosetLattice::make(l, picard::scale(k, KElem{picard::ratio(1, 2), 0}, h)),
                  std::invalid_argument);
  auto f = picard::rank_one(coset, picard::unit_vector(1));
  CHECK(f.shifted());
  const std::int64_t x = 400;
  auto oracle_counts = oracle::shifted_box_counts(f.qa, f.qb, f.qc, f.shift_a, f.shift_b, 40, x);
  auto bulk = picard::representation_counts(f, x);
  std::int64_t total = 0;
  for (std::int64_t n = 0; n <= x; ++n) {
    auto i = static_cast<std::size_t>(n);
    CHECK(bulk[i] == static_cast<std::uint64_t>(oracle_counts[i]));
    CHECK(picard::count_norm(f, n) == Int(static_cast<long>(oracle_counts[i])));
    total += oracle_counts[i];
    // values are norms of 1 + delta*u, so n = 1 mod 7 whenever represented
    if (oracle_counts[i] > 0) CHECK(n % 7 == 1);
  }
  CHECK(total > 0);
  CHECK(bulk[1] == 1);  // only 1 itself; -1 is not congruent to 1 mod delta
  // A shift off the line is rejected.
  CHECK_THROWS_AS(picard::rank_one(l, picard::unit_vector(1), picard::unit_vector(0)),
                  std::invalid_argument);
}
