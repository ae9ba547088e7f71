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


// Lambda-adic helpers: p-adic precision contexts, Iwasawa functions of the
// weight k, families of q-expansions whose coefficients are such functions,
// and the ordinary projector on finite U_p' models.
//
// Everything is computed modulo p^M with representatives in [0, p^M).
// Characters of finite order on 1 + pZ_p are not modelled; a weight-space
// point is just the integer k with gamma = 1 + p acting by (1 + p)^k.

#ifndef PICARD_HIDA_HPP_
#define PICARD_HIDA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/arith.hpp"
#include "picard/linalg.hpp"
#include "picard/qexp.hpp"
#include "picard/quad_field.hpp"

namespace picard {

class PadicCtx {
 public:
  // Throws std::invalid_argument for p not prime, M < 1, or (with a field)
  // p not split in K.
  static PadicCtx make(std::int64_t p, int precision, const std::optional<FieldCtx>& field = std::nullopt);

  std::int64_t p() const { return p_; }
  int precision() const { return m_; }
  const Int& modulus() const { return modulus_; }
  Int reduce(const Int& x) const { return mod(x, modulus_); }

  friend bool operator==(const PadicCtx& a, const PadicCtx& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

 private:
  std::int64_t p_ = 2;
  int m_ = 1;
  Int modulus_ = 2;
};

struct ArithPoint {
  std::int64_t k = 2;
  // (1 + p)^k mod p^M.
  Int gamma_value(const PadicCtx& ctx) const;
};

// One factor of an Iwasawa function.
struct IwasawaAtom {
  enum class Kind {
    kConstant,     // value
    kDivisorSum,   // sum_{d | n, p does not divide d} (disc / d) d^(k + shift)
    kPolynomialT,  // sum_i coeffs[i] T^i at T = (1 + p)^k - 1
    kPolynomialK,  // sum_i coeffs[i] k^i; not continuous in k in general
  };
  Kind kind = Kind::kConstant;
  Int value = 1;
  std::int64_t n = 1;
  std::int64_t disc = 1;
  std::int64_t shift = -1;
  std::vector<Int> coeffs;

  friend bool operator==(const IwasawaAtom&, const IwasawaAtom&) = default;
};

// A finite product of atoms; the empty product is 1.
class IwasawaFn {
 public:
  IwasawaFn() = default;
  static IwasawaFn constant(const Int& c);
  static IwasawaFn divisor_sum(std::int64_t n, std::int64_t disc, std::int64_t shift = -1);
  static IwasawaFn polynomial_t(std::vector<Int> coeffs);
  static IwasawaFn polynomial_k(std::vector<Int> coeffs);

  const std::vector<IwasawaAtom>& factors() const { return factors_; }
  Int eval(const PadicCtx& ctx, std::int64_t k) const;
  bool is_zero_constant() const;

  friend IwasawaFn operator*(const IwasawaFn& a, const IwasawaFn& b);
  friend bool operator==(const IwasawaFn&, const IwasawaFn&) = default;

 private:
  explicit IwasawaFn(IwasawaAtom atom) : factors_{std::move(atom)} {}
  std::vector<IwasawaAtom> factors_;
};

struct LambdaFamily {
  PadicCtx padic;
  std::int64_t tame_level = 1;
  std::int64_t char_disc = 1;
  // The specialization at k has weight k + weight_shift.
  int weight_shift = 0;
  // rules[n] gives a_n; rules[0] is the constant term.
  std::vector<IwasawaFn> rules;

  std::int64_t trunc() const { return static_cast<std::int64_t>(rules.size()) - 1; }
};

// a_0 = 0 and a_n(k) = sum_{d | n, p does not divide d} chi(d) d^(k-1), with
// weight k, tame level |disc K| and the character of K.
// Throws std::invalid_argument unless p splits in K.
LambdaFamily eisenstein_family(const FieldCtx& ctx, const PadicCtx& padic, std::int64_t n_terms);

// Coefficients a_n(k) mod p^M for n <= n_terms, tagged with weight k + shift,
// level tame_level * p and the family character. Throws for n_terms beyond
// the family truncation.
QExpansion specialize(const LambdaFamily& family, const ArithPoint& point, std::int64_t n_terms);

// Requires k = k' mod (p - 1) p^m and m + 1 <= M; true iff
// a_n(k) = a_n(k') mod p^(m+1) for every n <= n_terms.
bool congruence_check(const LambdaFamily& family, std::int64_t k, std::int64_t k_prime, int m,
                      std::int64_t n_terms);
// First n with a_n(k) != a_n(k') mod p^(m+1), if any.
std::optional<std::int64_t> congruence_witness(const LambdaFamily& family, std::int64_t k,
                                               std::int64_t k_prime, int m, std::int64_t n_terms);

// Coefficientwise product lambda * F.
LambdaFamily scale_family(const LambdaFamily& family, const IwasawaFn& lambda);

struct FiniteUpModel {
  PadicCtx padic;
  IntMatrix matrix;
  std::vector<std::string> basis;
};

// Throws std::invalid_argument for a non-square matrix or a basis of the
// wrong length. Entries are reduced mod p^M.
FiniteUpModel make_model(const PadicCtx& padic, IntMatrix matrix, std::vector<std::string> basis = {});

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, const Int& m);
IntMatrix mat_pow_mod(const IntMatrix& a, const Int& exp, const Int& m);

std::int64_t rank_mod_p(const IntMatrix& a, std::int64_t p);

// |GL_d(F_p)|.
Int gl_order(std::int64_t d, std::int64_t p);

struct ProjectorResult {
  IntMatrix e;
  // Number of p-th power steps after the initial |GL_d(F_p)|-th power.
  int iterations = 0;
  // Rank of the ordinary part: e is idempotent, so its image is free of
  // rank equal to the rank of e mod p.
  std::int64_t rank = 0;
};

// lim (U_p')^{n!} on the model: B = A^{|GL_d(F_p)|}, then B <- B^p until
// B^2 = B. Throws std::runtime_error if the cap is hit.
ProjectorResult ordinary_projector(const FiniteUpModel& model, int iteration_cap = 4096);

}  // namespace picard

#endif  // PICARD_HIDA_HPP_
