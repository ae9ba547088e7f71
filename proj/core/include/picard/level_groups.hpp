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


// Level subgroups of GL_3(Z_p) x GL_1(Z_p) at a split prime, with
// tau = diag(p^2, p, 1):
//
//   K_r    e = 1 (p^r), b = f = 0 (p^r), c = 0 (p^2r)
//   K'_r   e = 1 (p^r), b = f = 0 (p^(r+1)), c = 0 (p^(2r+2))
//   K^1_r  diagonal = 1 (p^2r), upper triangle = 0 (p^2r)
//   K^0_r  upper triangle = 0 (p^r)
//   V_r, V^1_r, V^0_r   tau^-r (K-group) tau^r
//
// for g = (a b c / d e f / g h i), together with det g and x units. Matrices
// are rational; membership first asks for p-integrality, so inverses of
// elements of GL_3(Z_p) can be tested directly.

#ifndef PICARD_LEVEL_GROUPS_HPP_
#define PICARD_LEVEL_GROUPS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "picard/arith.hpp"
#include "picard/linalg.hpp"
#include "picard/quad_field.hpp"

namespace picard {

enum class Level { kK, kKPrime, kV, kK0, kK1, kV0, kV1 };
std::string to_string(Level level);
// Accepts "K", "K'", "Kprime", "V", "K0", "K1", "V0", "V1".
Level parse_level(const std::string& name);

struct LevelElement {
  RatMatrix g = RatMatrix::identity(3);
  Int x = 1;
};

bool is_p_integral(const Rat& q, std::int64_t p);
bool is_p_unit(const Rat& q, std::int64_t p);

// tau^-r g tau^r; r may be negative.
RatMatrix conj_tau(const RatMatrix& g, std::int64_t p, int r);

bool member(Level level, const LevelElement& e, std::int64_t p, int r);
bool member(Level level, const RatMatrix& g, std::int64_t p, int r);

// Constructive sampling: free entries uniform mod p^(2r+2), constrained
// entries forced into the congruence classes, det-unit rejection. V-groups
// are sampled by conjugating a K-group sample.
LevelElement random_member(Level level, std::int64_t p, int r, std::mt19937_64& rng);

RatMatrix gamma_r(std::int64_t p, int r);
// tau^-r gamma_r tau^r.
RatMatrix gamma_prime_r(std::int64_t p, int r);
RatMatrix tau_matrix(std::int64_t p);

struct GammaReport {
  std::int64_t p = 0;
  int r = 0;
  bool cube = false;        // gamma^3 = p^2r
  bool cube_prime = false;  // gamma'^3 = p^2r
  bool tau = false;         // gamma tau gamma^-1 = diag(1, p^2, p)
  bool tau_prime = false;
  int samples = 0;
  int k1_preserved = 0;  // gamma K^1 gamma^-1 and gamma^-1 K^1 gamma
  int v1_preserved = 0;  // same for gamma' and V^1
  bool ok() const {
    return cube && cube_prime && tau && tau_prime && k1_preserved == samples && v1_preserved == samples;
  }
};

GammaReport verify_gamma(std::int64_t p, int r, int samples, std::uint64_t seed);

struct InclusionReport {
  Level small;
  int small_r = 0;
  Level big;
  int big_r = 0;
  int samples = 0;
  int failures = 0;
  std::optional<LevelElement> witness;
};

// Random members of `small` at level small_r tested for membership in `big`
// at level big_r.
InclusionReport check_inclusion(Level small, int small_r, Level big, int big_r, std::int64_t p, int samples,
                                std::uint64_t seed);
// K'_r membership against (K_r and tau^-1 g tau in K_r), on random members
// of K_r, K'_r, K_(r+1) and perturbations of them.
InclusionReport check_kprime_intersection(std::int64_t p, int r, int samples, std::uint64_t seed);

struct NormalityReport {
  Level sub;
  Level group;
  int samples = 0;
  int failures = 0;
  // n in sub, g in group with g n g^-1 outside sub.
  std::optional<LevelElement> n;
  std::optional<LevelElement> g;
};

NormalityReport check_normality(Level sub, Level group, std::int64_t p, int r, int samples,
                                std::uint64_t seed);

// ---- u^-1 Q_H^0 u against the opposite Borel ------------------------------

struct Lemma46Options {
  std::int64_t p = 3;
  int s = 5;
  // Generator of a prime above p; default is a norm-p element a + b w.
  std::optional<QuadInt> varpi;
  // Root of the minimal polynomial of w mod p^s used for K -> Q_p, chosen
  // by its residue mod p. Default: the root making varpi a non-unit.
  std::optional<std::int64_t> omega_residue;
  std::size_t max_listed = 20;
};

struct Lemma46Solution {
  std::int64_t a = 0, b = 0, x = 0;
  friend bool operator==(const Lemma46Solution&, const Lemma46Solution&) = default;
};

struct Lemma46Report {
  std::int64_t p = 0;
  int s = 0;
  QuadInt varpi;
  std::int64_t iota_omega = 0;
  std::int64_t iota_delta = 0;
  std::int64_t iota_varpi = 0;
  std::uint64_t checked = 0;
  std::uint64_t solution_count = 0;
  std::vector<Lemma46Solution> solutions;  // at most max_listed
  bool holds() const {
    return solution_count == 1 && solutions.size() == 1 && solutions[0] == Lemma46Solution{1, 0, 1};
  }
};

// Smallest a + b w (by max(|a|, |b|)) of norm p. Throws std::invalid_argument
// when none exists.
QuadInt default_varpi(const FieldCtx& ctx, std::int64_t p);

// Both roots of x^2 - tr(w) x + N(w) mod p^s, Hensel-lifted; p must split.
std::vector<std::int64_t> omega_embeddings(const FieldCtx& ctx, std::int64_t p, int s);

// u^-1 (h, x) u for h = (a b / 0 1), u = (1 delta varpi / 0 1 1 / 0 0 1),
// entries reduced mod p^s.
std::vector<std::int64_t> lemma46_conjugate(std::int64_t a, std::int64_t b, std::int64_t x,
                                            std::int64_t delta, std::int64_t varpi, std::int64_t modulus);

// Exhaustive sweep of a, x units and b arbitrary mod p^s, listing the
// parameters whose conjugate is lower triangular.
Lemma46Report lemma46_check(const FieldCtx& ctx, const Lemma46Options& options);

}  // namespace picard

#endif  // PICARD_LEVEL_GROUPS_HPP_
