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


// Finite models of the Lambda_r-valued pairing
//
//   [x, y]_r = sum_{s in Gamma_r} (x^s, lambda_* U'^r y)_r [s^-1]
//
// with Gamma_r = 1 + p(Z/p^r), cyclic of order p^(r-1) generated by 1 + p
// for odd p, and coefficients in Z/p^M. A PairingContext holds, for each
// level r = 1..R, a module (Z/p^M)^dim with its form, diamond generator,
// lambda_*, lambda^*, U' and optional Hecke operator, plus the maps
// pi_* : level r+1 -> level r and pi^* : level r -> level r+1.

#ifndef PICARD_BIG_PAIRING_HPP_
#define PICARD_BIG_PAIRING_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "picard/arith.hpp"
#include "picard/cogdell_series.hpp"
#include "picard/qexp.hpp"

namespace picard {

using ModVec = std::vector<std::int64_t>;

// Dense matrix over Z/m with m < 2^62.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus);
  static ModMatrix identity(std::size_t n, std::int64_t modulus);
  static ModMatrix scalar(std::size_t n, std::int64_t c, std::int64_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  // Stores v mod m.
  void set(std::size_t i, std::size_t j, std::int64_t v);

  ModMatrix transpose() const;
  ModMatrix pow(std::uint64_t e) const;
  // Throws std::domain_error unless the determinant is a unit.
  ModMatrix inverse() const;
  ModVec apply(const ModVec& v) const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> data_;
};

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t mod_pow(std::int64_t a, std::uint64_t e, std::int64_t m);

// Element of (Z/p^M)[Gamma_r]; coeffs[i] multiplies [(1 + p)^i].
class GroupRingElt {
 public:
  GroupRingElt() = default;
  // Throws std::invalid_argument for p = 2 or non-prime p (Gamma_r is not
  // cyclic for p = 2), r < 1 or M < 1.
  GroupRingElt(std::int64_t p, int r, int precision);

  static GroupRingElt group_element(std::int64_t p, int r, int precision, std::int64_t log_index);
  static GroupRingElt norm_element(std::int64_t p, int r, int precision);

  std::int64_t p() const { return p_; }
  int r() const { return r_; }
  int precision() const { return m_; }
  std::int64_t modulus() const { return modulus_; }
  // |Gamma_r| = p^(r-1).
  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::int64_t log_index) const;
  void set(std::int64_t log_index, std::int64_t v);
  void add_to(std::int64_t log_index, std::int64_t v);
  bool is_zero() const;

  // [s] -> [s^-1].
  GroupRingElt involution() const;
  // p_{r+1} : Lambda_r -> Lambda_{r-1}, induced by Gamma_r -> Gamma_{r-1}.
  GroupRingElt project() const;

  friend GroupRingElt operator+(const GroupRingElt& a, const GroupRingElt& b);
  friend GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b);
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
  friend GroupRingElt operator*(std::int64_t c, const GroupRingElt& a);
  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

 private:
  std::int64_t p_ = 3;
  int r_ = 1;
  int m_ = 1;
  std::int64_t modulus_ = 3;
  std::vector<std::int64_t> coeffs_;
};

// (1 + p)^i mod p^r for the log index i.
std::int64_t gamma_value(std::int64_t p, int r, std::int64_t log_index);
// Log index of s = 1 mod p in Z/p^r. Throws for s != 1 mod p.
std::int64_t gamma_log(std::int64_t p, int r, std::int64_t s);

struct LevelModel {
  ModMatrix form;
  ModMatrix diamond;      // action of 1 + p
  ModMatrix lambda_push;  // lambda_{r,*}
  ModMatrix lambda_pull;  // lambda_r^*
  ModMatrix up;           // U'
  std::optional<ModMatrix> hecke;

  std::size_t dim() const { return form.rows(); }
};

struct PairingContext {
  std::int64_t p = 3;
  int precision = 8;
  std::int64_t modulus = 6561;
  // levels[r - 1] for r = 1..R.
  std::vector<LevelModel> levels;
  // push[r - 1] = pi_{r+1,*} and pull[r - 1] = pi_{r+1}^* for r = 1..R-1.
  std::vector<ModMatrix> push;
  std::vector<ModMatrix> pull;

  int max_level() const { return static_cast<int>(levels.size()); }
  const LevelModel& level(int r) const;
};

struct ContextCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Shapes, diamond order and isometry, U' = lambda^* U'^* lambda_* with
// U'^* the form adjoint, Hecke self-adjointness and commutation, and the
// tower data: pi^* adjoint to pi_*, pi^* pi_* = sum over ker(Gamma_{r+1} ->
// Gamma_r), pi_* lambda_* U'^(r+1) = lambda_* U'^r pi_*, pi_* equivariant.
ContextCheck check_context(const PairingContext& ctx);

struct RegularModelOptions {
  std::int64_t p = 3;
  int precision = 8;
  int max_level = 4;
  std::size_t rank = 2;
  std::uint64_t seed = 1;
  // U' = u; lambda_* = u^-r P [s0] so that lambda_* U'^r does not depend on r.
  std::optional<std::int64_t> up_scalar;
  bool with_hecke = true;
};

// Lambda_r^d with the translation action, form eps(sum x_j G_jk y_k^*),
// lambda_* a coordinate permutation times a translation, pi_* the
// coefficientwise projection and pi^* the fiber sum.
PairingContext regular_context(const RegularModelOptions& options);

// Lambda_r itself: the translation action, form sum_i x_i y_i, lambda = U' = 1,
// pi_* the projection and pi^* the fiber sum.
PairingContext trivial_context(std::int64_t p, int precision, int max_level);

// Operators raised to integer powers on x at level r.
ModVec apply_power(const ModMatrix& m, const ModVec& x, std::int64_t e);

GroupRingElt pair_r(const PairingContext& ctx, int r, const ModVec& x, const ModVec& y);
// x^s for the group element of log index i.
ModVec diamond_act(const PairingContext& ctx, int r, const ModVec& x, std::int64_t log_index);

struct PairingProperties {
  int instances = 0;
  int semilinear = 0;        // [x^s, y] = [s] [x, y]
  int semilinear_second = 0; // [x, y^s] = [s^-1] [x, y]
  int hecke = 0;             // [T x, y] = [x, T y]; counted only with a Hecke operator
  int diagram = 0;           // p_{r+1}[x, y]_{r+1} = [pi_* x, pi_* y]_r
  bool all_pass() const;
};

// Random levels, vectors and group elements; the diagram needs R >= 2.
PairingProperties pairing_properties(const PairingContext& ctx, int instances, std::uint64_t seed);

struct BigClass {
  // tower[r - 1] lives at level r.
  std::vector<ModVec> tower;
};

// First r with pi_{r+1,*} x_{r+1} != U' x_r, if any.
std::optional<int> check_tower(const PairingContext& ctx, const BigClass& b);
const ModVec& project_tower(const BigClass& b, int r);
// x_R = top, x_r = U'^-1 pi_* x_{r+1}.
BigClass tower_from_top(const PairingContext& ctx, const ModVec& top);

// coeffs[n][r - 1] = [U'^-r x_{n,r}, U'^-r zeta_r]_r for n = 1..N; coeffs[0]
// is zero (cuspidal convention).
struct PhiExpansion {
  std::int64_t p = 3;
  int precision = 8;
  std::int64_t tame_level = 1;
  std::int64_t char_disc = 1;
  std::vector<std::vector<GroupRingElt>> coeffs;

  std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  int max_level() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].size()); }
};

// Throws std::invalid_argument for an incompatible tower or too few xis.
// xis[n - 1] is the class for q^n.
PhiExpansion phi_expansion(const PairingContext& ctx, const std::vector<BigClass>& xis, const BigClass& zeta,
                           std::int64_t n_terms, std::int64_t tame_level = 1, std::int64_t char_disc = 1);

// First (n, r) with p_{r+1}(coeff at r+1) != coeff at r.
std::optional<std::pair<std::int64_t, int>> check_coherence(const PhiExpansion& phi);

// sum_i c_i (1 + p)^(2 k i) over the canonical lifts i in [0, p^(r-1)),
// weight 2k + 3, level p^r * tame_level.
QExpansion nu_specialize(const PhiExpansion& phi, int k, int r);

// sum_{i < p^(r-1)} (1 + p)^(2 k i) mod p^M: the specialization of the norm element.
std::int64_t norm_character_sum(std::int64_t p, int r, int k, int precision);

// The cusp-series data bound to trivial_context: x_{n,r} = a_n [1] with a_n
// the weight-0 coefficient mod p^M, and zeta_r = [1].
struct SeriesBinding {
  PairingContext ctx;
  std::vector<BigClass> xis;
  BigClass zeta;
  PhiExpansion phi;
};

SeriesBinding bind_series(const SeriesParams& params, std::int64_t p, int precision, int max_level);

struct ShadowReport {
  int k = 0;
  int r = 1;
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::optional<std::int64_t> first_mismatch;
};

// Compares n^k (d d^)^-k nu_{2k,r}(Phi)_n with a_n(higher weight series)
// mod p^M for 1 <= n <= n_terms.
ShadowReport series_shadow(const SeriesBinding& binding, const SeriesParams& params, int k, int r,
                           std::int64_t n_terms);

}  // namespace picard

#endif  // PICARD_BIG_PAIRING_HPP_
