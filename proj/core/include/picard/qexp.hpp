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


// Truncated q-expansions sum_{n <= N} a_n q^n tagged with weight, level and
// a quadratic character n -> (char_disc / n). Coefficients are exact
// rationals, or residues in [0, m) when a modulus m is attached.

#ifndef PICARD_QEXP_HPP_
#define PICARD_QEXP_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "picard/arith.hpp"
#include "picard/quad_field.hpp"

namespace picard {

class QExpansion {
 public:
  QExpansion() = default;
  // char_disc = 1 is the trivial character; modulus = 0 means exact.
  QExpansion(std::vector<Rat> coeffs, int weight, std::int64_t level, std::int64_t char_disc = 1,
             Int modulus = 0);

  static QExpansion zero(std::int64_t trunc, int weight, std::int64_t level,
                         std::int64_t char_disc = 1, Int modulus = 0);

  int weight() const { return weight_; }
  std::int64_t level() const { return level_; }
  std::int64_t character_disc() const { return char_disc_; }
  const Int& modulus() const { return modulus_; }
  bool is_exact() const { return modulus_ == 0; }
  std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::int64_t n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  // Stores v, reduced when a modulus is attached.
  void set(std::int64_t n, const Rat& v);

  int chi(const Int& n) const;
  int chi(std::int64_t n) const { return chi(Int(static_cast<long>(n))); }

  QExpansion truncated(std::int64_t n) const;
  QExpansion with_tags(int weight, std::int64_t level, std::int64_t char_disc) const;
  // Reduce an exact expansion mod m (denominators must be units).
  QExpansion reduced(const Int& m) const;
  bool is_zero() const;

  friend bool operator==(const QExpansion&, const QExpansion&) = default;

 private:
  std::vector<Rat> coeffs_;
  int weight_ = 0;
  std::int64_t level_ = 1;
  std::int64_t char_disc_ = 1;
  Int modulus_ = 0;
};

// Coefficientwise sum and scalar multiple; the sum keeps the shorter truncation.
// Throws std::invalid_argument on mismatched tags.
QExpansion add(const QExpansion& f, const QExpansion& g);
QExpansion scale(const QExpansion& f, const Rat& c);

// a_n(T f) = a_{ln} + chi(l) l^(k-1) a_{n/l}; U_l (first term only) when l
// divides the level. The truncation becomes floor(N / l).
QExpansion hecke_T(const QExpansion& f, std::int64_t ell);

// B_{k,chi} = f^(k-1) sum_{a=1}^{f} chi(a) B_k(a/f) for the character of
// discriminant disc (conductor f = |disc|).
Rat generalized_bernoulli(int k, std::int64_t disc);

// a_0 = -B_{3,chi}/6 and a_n = sum_{d | n} chi(d) d^2: weight 3, level |disc|.
QExpansion eisenstein3(const FieldCtx& ctx, std::int64_t n_terms);

// q^{sum d e / 24} prod_d prod_m (1 - q^{dm})^{e}. Weight sum(e)/2, level the
// least multiple N of lcm(d) with sum (N/d) e = 0 mod 24, character
// ((-1)^k prod d^e / .). Throws std::invalid_argument for a fractional leading
// exponent or an odd sum of exponents.
QExpansion eta_product(const std::vector<std::pair<std::int64_t, int>>& factors, std::int64_t n_terms);

// [SL2(Z) : Gamma_0(M)] = M prod_{p | M} (1 + 1/p).
Int gamma0_index(std::int64_t level);
std::int64_t sturm_bound(int weight, std::int64_t level);
// Throws std::invalid_argument on mismatched tags or a truncation below the bound.
bool sturm_equal(const QExpansion& f, const QExpansion& g);

// ---- numerical transformation law ------------------------------------------

enum class BasePoints {
  // Im z in [min_imag, min_imag + imag_band], real part within 1/(2|c|) of
  // the pole -d/c, where Im(gamma z) is largest.
  kImagFloor,
  // z = -d/c + (u + i)/|c|, u in [-1/2, 1/2]: Im z = Im(gamma z) up to (1+u^2).
  kBalanced,
};

enum class Verdict { kPass, kFail, kInconclusive };
std::string to_string(Verdict v);

struct ModularityOptions {
  int samples = 200;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  BasePoints base_points = BasePoints::kImagFloor;
  // c = level * c' with 1 <= |c'| <= max_c_multiple.
  std::int64_t max_c_multiple = 10;
  std::int64_t max_entry = 1000;
  double min_imag = 0.8;
  double imag_band = 0.0;
  int witnesses = 5;
};

struct Gamma {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
};

struct ModularitySample {
  Gamma gamma;
  std::complex<double> z;
  double defect = 0;
  double tail = 0;
};

struct ModularityReport {
  Verdict verdict = Verdict::kPass;
  double max_defect = 0;
  double tail_bound = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  // Largest-defect samples, worst first.
  std::vector<ModularitySample> witnesses;
};

std::complex<double> evaluate(const QExpansion& f, std::complex<double> z);

// C * sum_{n > N} n^k exp(-2 pi n y) with C = max |a_n| / n^k fitted over
// N/2 <= n <= N (all n >= 1 when that range is zero).
double tail_bound(const QExpansion& f, double y);

// |f(gz) - chi(d)(cz+d)^k f(z)| / |f(z)|, and in `tail` a bound for the
// truncation and floating-point error of that quotient.
ModularitySample transformation_defect(const QExpansion& f, const Gamma& g, std::complex<double> z);

// Samples gamma in Gamma_0(level) and base points as configured. Throws
// std::invalid_argument when f has fewer than 50 terms or is not exact.
ModularityReport modularity_check(const QExpansion& f, const ModularityOptions& options);

}  // namespace picard

#endif  // PICARD_QEXP_HPP_
