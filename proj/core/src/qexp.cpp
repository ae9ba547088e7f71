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


#include "picard/qexp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "picard/rng.hpp"

namespace picard {

namespace {

void require_same_tags(const QExpansion& f, const QExpansion& g, const char* what) {
  if (f.weight() != g.weight() || f.level() != g.level() || f.character_disc() != g.character_disc() ||
      f.modulus() != g.modulus()) {
    throw std::invalid_argument(std::string(what) + ": mismatched weight/level/character/modulus");
  }
}

// Compensated (Kahan) accumulator.
struct Kahan {
  double sum = 0;
  double comp = 0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

using Series = std::vector<Int>;

Series mul_series(const Series& a, const Series& b, std::size_t len) {
  Series c(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// 1/a for a power series with a[0] = 1.
Series inverse_series(const Series& a, std::size_t len) {
  Series inv(len, 0);
  inv[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Int s = 0;
    for (std::size_t j = 1; j <= n && j < a.size(); ++j) s += a[j] * inv[n - j];
    inv[n] = -s;
  }
  return inv;
}

Series power_series(Series base, unsigned e, std::size_t len) {
  Series out(len, 0);
  out[0] = 1;
  while (e > 0) {
    if (e & 1U) out = mul_series(out, base, len);
    e >>= 1U;
    if (e > 0) base = mul_series(base, base, len);
  }
  return out;
}

// prod_{m >= 1} (1 - q^{dm}) from the pentagonal number theorem.
Series euler_product(std::int64_t d, std::size_t len) {
  Series s(len, 0);
  s[0] = 1;
  const auto n = static_cast<std::int64_t>(len);
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t p1 = d * (k * (3 * k - 1) / 2);
    const std::int64_t p2 = d * (k * (3 * k + 1) / 2);
    if (p1 >= n) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    s[static_cast<std::size_t>(p1)] = sign;
    if (p2 < n) s[static_cast<std::size_t>(p2)] = sign;
  }
  return s;
}

// Fundamental-discriminant-like tag of the character (t / .) for t != 0.
std::int64_t character_tag(std::int64_t sign, const Int& magnitude) {
  Int core = 1;
  Int m = magnitude;
  for (std::int64_t p = 2; m > 1; ++p) {
    if (Int(static_cast<long>(p)) * p > m) {
      core *= m;
      break;
    }
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      m /= static_cast<unsigned long>(p);
      ++e;
    }
    if (e % 2 == 1) core *= static_cast<unsigned long>(p);
  }
  std::int64_t t = sign * core.get_si();
  if (t == 1) return 1;
  std::int64_t r = ((t % 4) + 4) % 4;
  return r == 1 ? t : 4 * t;
}

}  // namespace

QExpansion::QExpansion(std::vector<Rat> coeffs, int weight, std::int64_t level, std::int64_t char_disc,
                       Int modulus)
    : coeffs_(std::move(coeffs)), weight_(weight), level_(level), char_disc_(char_disc),
      modulus_(std::move(modulus)) {
  if (coeffs_.empty()) throw std::invalid_argument("QExpansion needs at least the constant term");
  if (level_ < 1) throw std::invalid_argument("QExpansion level must be positive");
  if (modulus_ < 0) throw std::invalid_argument("QExpansion modulus must be >= 0");
  if (modulus_ != 0)
    for (Rat& c : coeffs_) c = Rat(rat_mod(c, modulus_));
}

QExpansion QExpansion::zero(std::int64_t trunc, int weight, std::int64_t level, std::int64_t char_disc,
                            Int modulus) {
  if (trunc < 0) throw std::invalid_argument("negative truncation");
  return QExpansion(std::vector<Rat>(static_cast<std::size_t>(trunc) + 1, Rat(0)), weight, level,
                    char_disc, std::move(modulus));
}

void QExpansion::set(std::int64_t n, const Rat& v) {
  coeffs_.at(static_cast<std::size_t>(n)) = modulus_ == 0 ? v : Rat(rat_mod(v, modulus_));
}

int QExpansion::chi(const Int& n) const {
  if (char_disc_ == 1) return 1;
  return kronecker(Int(static_cast<long>(char_disc_)), n);
}

QExpansion QExpansion::truncated(std::int64_t n) const {
  if (n < 0 || n > trunc()) throw std::invalid_argument("truncated: bad length");
  QExpansion out = *this;
  out.coeffs_.resize(static_cast<std::size_t>(n) + 1);
  return out;
}

QExpansion QExpansion::with_tags(int weight, std::int64_t level, std::int64_t char_disc) const {
  return QExpansion(coeffs_, weight, level, char_disc, modulus_);
}

QExpansion QExpansion::reduced(const Int& m) const {
  if (!is_exact()) throw std::invalid_argument("reduced: expansion already carries a modulus");
  return QExpansion(coeffs_, weight_, level_, char_disc_, m);
}

bool QExpansion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

QExpansion add(const QExpansion& f, const QExpansion& g) {
  require_same_tags(f, g, "add");
  std::int64_t n = std::min(f.trunc(), g.trunc());
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f[i] + g[i];
  return QExpansion(std::move(c), f.weight(), f.level(), f.character_disc(), f.modulus());
}

QExpansion scale(const QExpansion& f, const Rat& s) {
  std::vector<Rat> c = f.coeffs();
  for (Rat& x : c) x *= s;
  return QExpansion(std::move(c), f.weight(), f.level(), f.character_disc(), f.modulus());
}

QExpansion hecke_T(const QExpansion& f, std::int64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("hecke_T: l must be prime");
  const std::int64_t n_new = f.trunc() / ell;
  const bool u_operator = f.level() % ell == 0;
  const Rat factor = u_operator ? Rat(0) : Rat(f.chi(ell)) * rpow(Rat(ell), f.weight() - 1);
  std::vector<Rat> c(static_cast<std::size_t>(n_new) + 1);
  for (std::int64_t n = 0; n <= n_new; ++n) {
    Rat v = f[ell * n];
    if (factor != 0 && n % ell == 0) v += factor * f[n / ell];
    c[static_cast<std::size_t>(n)] = v;
  }
  return QExpansion(std::move(c), f.weight(), f.level(), f.character_disc(), f.modulus());
}

Rat generalized_bernoulli(int k, std::int64_t disc) {
  if (k < 0) throw std::invalid_argument("generalized_bernoulli: k must be >= 0");
  // Bernoulli numbers with B_1 = -1/2.
  std::vector<Rat> bern(static_cast<std::size_t>(k) + 1);
  bern[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rat s = 0;
    Int binom = 1;  // C(m + 1, j)
    for (int j = 0; j < m; ++j) {
      s += binom * bern[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    bern[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  auto bern_poly = [&](const Rat& x) {
    Rat v = 0;
    Int binom = 1;  // C(k, j)
    for (int j = 0; j <= k; ++j) {
      v += binom * bern[static_cast<std::size_t>(j)] * rpow(x, k - j);
      binom = binom * (k - j) / (j + 1);
    }
    return v;
  };
  const std::int64_t f = disc < 0 ? -disc : disc;
  Rat s = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    int c = disc == 1 ? 1 : kronecker(Int(static_cast<long>(disc)), Int(static_cast<long>(a)));
    if (c == 0) continue;
    s += c * bern_poly(ratio(a, f));
  }
  return rpow(Rat(f), k - 1) * s;
}

QExpansion eisenstein3(const FieldCtx& ctx, std::int64_t n_terms) {
  if (n_terms < 0) throw std::invalid_argument("eisenstein3: negative truncation");
  QExpansion e = QExpansion::zero(n_terms, 3, ctx.abs_disc(), ctx.disc());
  e.set(0, -generalized_bernoulli(3, ctx.disc()) / 6);
  // Sieve: add chi(d) d^2 to every multiple of d.
  std::vector<Int> acc(static_cast<std::size_t>(n_terms) + 1, 0);
  for (std::int64_t d = 1; d <= n_terms; ++d) {
    int c = ctx.chi(d);
    if (c == 0) continue;
    Int term = Int(static_cast<long>(c)) * d * d;
    for (std::int64_t m = d; m <= n_terms; m += d) acc[static_cast<std::size_t>(m)] += term;
  }
  for (std::int64_t n = 1; n <= n_terms; ++n) e.set(n, Rat(acc[static_cast<std::size_t>(n)]));
  return e;
}

QExpansion eta_product(const std::vector<std::pair<std::int64_t, int>>& factors, std::int64_t n_terms) {
  if (factors.empty()) throw std::invalid_argument("eta_product: no factors");
  if (n_terms < 0) throw std::invalid_argument("eta_product: negative truncation");
  std::int64_t shift24 = 0;
  std::int64_t exp_sum = 0;
  std::int64_t lcm_d = 1;
  Int num = 1, den = 1;
  for (auto [d, e] : factors) {
    if (d < 1) throw std::invalid_argument("eta_product: d must be positive");
    shift24 += d * e;
    exp_sum += e;
    lcm_d = std::lcm(lcm_d, d);
    Int pw = ipow(Int(static_cast<long>(d)), static_cast<unsigned long>(std::abs(e)));
    (e >= 0 ? num : den) *= pw;
  }
  if (shift24 % 24 != 0 || shift24 < 0) {
    throw std::invalid_argument("eta_product: leading exponent sum(d e)/24 = " + std::to_string(shift24) +
                                "/24 is not a non-negative integer");
  }
  if (exp_sum % 2 != 0) throw std::invalid_argument("eta_product: half-integral weight not supported");
  const int weight = static_cast<int>(exp_sum / 2);
  std::int64_t level = lcm_d;
  for (std::int64_t j = 1;; ++j) {
    std::int64_t n = lcm_d * j;
    std::int64_t s = 0;
    for (auto [d, e] : factors) s += (n / d) * e;
    if (s % 24 == 0) {
      level = n;
      break;
    }
  }
  const std::int64_t sign = (weight % 2 == 0) ? 1 : -1;
  const std::int64_t char_disc = character_tag(sign, num * den);

  const std::int64_t shift = shift24 / 24;
  QExpansion out = QExpansion::zero(n_terms, weight, level, char_disc);
  if (shift > n_terms) return out;
  const auto len = static_cast<std::size_t>(n_terms - shift + 1);
  Series prod(len, 0);
  prod[0] = 1;
  for (auto [d, e] : factors) {
    if (e == 0) continue;
    Series base = euler_product(d, len);
    if (e < 0) base = inverse_series(base, len);
    prod = mul_series(prod, power_series(base, static_cast<unsigned>(std::abs(e)), len), len);
  }
  for (std::size_t i = 0; i < len; ++i) out.set(static_cast<std::int64_t>(i) + shift, Rat(prod[i]));
  return out;
}

Int gamma0_index(std::int64_t level) {
  if (level < 1) throw std::invalid_argument("gamma0_index: level must be positive");
  Rat idx(level);
  for (const auto& [p, e] : factor(level)) idx *= ratio(p + 1, p);
  return idx.get_num();
}

std::int64_t sturm_bound(int weight, std::int64_t level) {
  Int v = Int(weight) * gamma0_index(level) / 12;
  return v.get_si();
}

bool sturm_equal(const QExpansion& f, const QExpansion& g) {
  require_same_tags(f, g, "sturm_equal");
  const std::int64_t b = sturm_bound(f.weight(), f.level());
  if (f.trunc() < b || g.trunc() < b) {
    throw std::invalid_argument("sturm_equal: truncation below the Sturm bound " + std::to_string(b));
  }
  for (std::int64_t n = 0; n <= b; ++n)
    if (f[n] != g[n]) return false;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

using Ld = long double;
using Cld = std::complex<long double>;

struct KahanLd {
  Ld sum = 0;
  Ld comp = 0;
  void add(Ld x) {
    Ld y = x - comp;
    Ld t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

Ld to_ld(const Rat& q) {
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
    return static_cast<Ld>(num.get_d()) / static_cast<Ld>(den.get_d());
  }
  return static_cast<Ld>(q.get_d());
}

Cld evaluate_ld(const QExpansion& f, Cld z) {
  const Ld two_pi = 2 * std::numbers::pi_v<Ld>;
  const Ld x = z.real() - std::floor(z.real());
  const Ld y = z.imag();
  KahanLd re, im;
  for (std::int64_t n = 0; n <= f.trunc(); ++n) {
    if (f[n] == 0) continue;
    const Ld nn = static_cast<Ld>(n);
    const Ld mag = to_ld(f[n]) * std::exp(-two_pi * nn * y);
    if (mag == 0) continue;
    const Ld phase = two_pi * std::fmod(nn * x, Ld(1));
    re.add(mag * std::cos(phase));
    im.add(mag * std::sin(phase));
  }
  return {re.sum, im.sum};
}

// Error of evaluate_ld at z when z itself is only known to relative
// precision eps * scale: term rounding plus first-order phase/height error.
double rounding_bound(const QExpansion& f, Cld z, Ld scale) {
  const Ld two_pi = 2 * std::numbers::pi_v<Ld>;
  KahanLd sum;
  for (std::int64_t n = 0; n <= f.trunc(); ++n) {
    if (f[n] == 0) continue;
    const Ld nn = static_cast<Ld>(n);
    sum.add(std::abs(to_ld(f[n])) * (1 + two_pi * nn * (std::abs(z) + 1)) *
            std::exp(-two_pi * nn * z.imag()));
  }
  return static_cast<double>(16 * std::numeric_limits<Ld>::epsilon() * std::max<Ld>(1, scale) * sum.sum);
}

}  // namespace

std::complex<double> evaluate(const QExpansion& f, std::complex<double> z) {
  Cld v = evaluate_ld(f, Cld(z.real(), z.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double tail_bound(const QExpansion& f, double y) {
  const double two_pi = 2 * std::numbers::pi;
  const int k = std::max(f.weight(), 0);
  // Fit C on the upper half of the coefficients, where the growth rate shows;
  // fall back to the full range when that half is empty.
  auto fit = [&](std::int64_t lo) {
    double c = 0;
    for (std::int64_t n = std::max<std::int64_t>(lo, 1); n <= f.trunc(); ++n) {
      if (f[n] == 0) continue;
      c = std::max(c, std::abs(f[n].get_d()) / std::pow(static_cast<double>(n), k));
    }
    return c;
  };
  double c = fit(f.trunc() / 2);
  if (c == 0) c = fit(1);
  if (c == 0) return 0;
  const double log_c = std::log(c);
  const double peak = k / (two_pi * y);
  Kahan sum;
  for (std::int64_t n = f.trunc() + 1; n < f.trunc() + 50'000'000; ++n) {
    const double nn = static_cast<double>(n);
    const double t = std::exp(log_c + k * std::log(nn) - two_pi * nn * y);
    if (nn > peak) {
      const double r = std::exp(k * std::log1p(1.0 / nn) - two_pi * y);
      if (r < 1) {
        // Successive ratios only shrink past the peak, so a geometric bound holds.
        const double rest = t / (1 - r);
        if (rest <= 1e-6 * sum.sum || rest < 1e-300) return sum.sum + rest;
      }
    }
    sum.add(t);
  }
  return std::numeric_limits<double>::infinity();
}

ModularitySample transformation_defect(const QExpansion& f, const Gamma& g, std::complex<double> z) {
  ModularitySample s;
  s.gamma = g;
  s.z = z;
  const Cld zl(z.real(), z.imag());
  const Ld a = static_cast<Ld>(g.a), c = static_cast<Ld>(g.c), d = static_cast<Ld>(g.d);
  const Cld j = c * zl + d;
  // gamma z = a/c - 1/(c (cz + d)) avoids the cancellation in (az + b).
  const Cld gz = g.c == 0 ? (a * zl + static_cast<Ld>(g.b)) / d : a / c - Ld(1) / (c * j);
  Cld jk = 1;
  for (int i = 0; i < f.weight(); ++i) jk *= j;
  const Cld fz = evaluate_ld(f, zl);
  const Cld fgz = evaluate_ld(f, gz);
  const Ld chi = f.chi(g.d);
  const Ld denom = std::abs(fz);
  const Ld diff = std::abs(fgz - chi * jk * fz);
  if (denom == 0) {
    s.defect = diff == 0 ? 0 : std::numeric_limits<double>::infinity();
    return s;
  }
  s.defect = static_cast<double>(diff / denom);
  // Relative error of j is about eps * (|c z| + |d|) / |j|; it feeds gamma z
  // through 1/(c j) and the factor j^k.
  const Ld j_scale = (std::abs(c * zl) + std::abs(d)) / std::abs(j);
  const Ld gz_scale = j_scale / (std::abs(c) * std::abs(j) * (std::abs(gz) + 1)) + 2;
  const Ld jk_err = 4 * std::numeric_limits<Ld>::epsilon() * (f.weight() + 1) * j_scale;
  s.tail = static_cast<double>(
      (tail_bound(f, static_cast<double>(gz.imag())) + rounding_bound(f, gz, gz_scale) +
       std::abs(jk) * (tail_bound(f, z.imag()) + rounding_bound(f, zl, 2) + jk_err * denom)) /
      denom);
  return s;
}

ModularityReport modularity_check(const QExpansion& f, const ModularityOptions& options) {
  if (!f.is_exact()) throw std::invalid_argument("modularity_check needs exact coefficients");
  if (f.trunc() + 1 < 50) throw std::invalid_argument("modularity_check needs at least 50 terms");
  if (options.samples < 1 || options.max_c_multiple < 1 || options.max_entry < 1) {
    throw std::invalid_argument("modularity_check: bad sampling options");
  }
  std::mt19937_64 rng = make_rng(options.seed, 0x716578);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  std::uniform_int_distribution<std::int64_t> cdist(1, options.max_c_multiple);
  std::uniform_int_distribution<std::int64_t> ddist(-options.max_entry, options.max_entry);

  ModularityReport report;
  report.seed = options.seed;
  report.samples = options.samples;
  std::vector<ModularitySample> all;
  bool violated = false;
  for (int i = 0; i < options.samples; ++i) {
    Gamma g;
    g.c = f.level() * cdist(rng) * ((rng() & 1U) ? 1 : -1);
    do {
      g.d = ddist(rng);
    } while (g.d == 0 || std::gcd(g.d, g.c) != 1);
    const Int cc(static_cast<long>(std::abs(g.c)));
    Int a = inverse_mod(Int(static_cast<long>(g.d)), cc);
    if (2 * a > cc) a -= cc;
    g.a = a.get_si();
    g.b = (g.a * g.d - 1) / g.c;
    const double cd = static_cast<double>(g.c);
    const double pole = -static_cast<double>(g.d) / cd;
    const double abs_c = std::abs(cd);
    std::complex<double> z;
    if (options.base_points == BasePoints::kBalanced) {
      z = {pole + unit(rng) / abs_c, 1.0 / abs_c};
    } else {
      z = {pole + unit(rng) / abs_c, options.min_imag + (unit(rng) + 0.5) * options.imag_band};
    }
    ModularitySample s = transformation_defect(f, g, z);
    report.max_defect = std::max(report.max_defect, s.defect);
    report.tail_bound = std::max(report.tail_bound, s.tail);
    if (s.defect - s.tail > options.tol) violated = true;
    all.push_back(s);
  }
  std::sort(all.begin(), all.end(),
            [](const ModularitySample& x, const ModularitySample& y) { return x.defect > y.defect; });
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(options.witnesses, 0))));
  report.witnesses = std::move(all);
  if (violated) {
    report.verdict = Verdict::kFail;
  } else if (report.tail_bound > options.tol || report.max_defect >= options.tol) {
    report.verdict = Verdict::kInconclusive;
  } else {
    report.verdict = Verdict::kPass;
  }
  return report;
}

}  // namespace picard
