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


#include "picard/level_groups.hpp"

#include <stdexcept>

#include "picard/rng.hpp"

namespace picard {

namespace {

constexpr int kWeights[3] = {2, 1, 0};

Int ppow(std::int64_t p, int e) { return ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(e)); }

// q = target (mod p^e) for a p-integral q; e = 0 always holds. The
// denominator is a p-unit, so only the numerator of q - target matters.
bool congruent(const Rat& q, long target, std::int64_t p, int e) {
  if (e <= 0) return true;
  Int num = q.get_num() - target * q.get_den();
  if (num == 0) return true;
  Int pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return mpz_divisible_p(num.get_mpz_t(), pe.get_mpz_t()) != 0;
}

Rat det3(const RatMatrix& g) {
  return g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
         g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
}

// Uniform in [0, m) from 64-bit words, with 64 spare bits against bias.
Int uniform_below(const Int& m, std::mt19937_64& rng) {
  Int t = 0;
  for (std::size_t bits = 0; bits < mpz_sizeinbase(m.get_mpz_t(), 2) + 64; bits += 64) {
    t <<= 64;
    const std::uint64_t w = rng();
    t += Int(static_cast<unsigned long>(w));
  }
  return mod(t, m);
}

bool k_conditions(Level level, const RatMatrix& g, std::int64_t p, int r) {
  const Rat& b = g(0, 1);
  const Rat& c = g(0, 2);
  const Rat& e = g(1, 1);
  const Rat& f = g(1, 2);
  switch (level) {
    case Level::kK:
      return congruent(e, 1, p, r) && congruent(b, 0, p, r) && congruent(f, 0, p, r) && congruent(c, 0, p, 2 * r);
    case Level::kKPrime:
      return congruent(e, 1, p, r) && congruent(b, 0, p, r + 1) && congruent(f, 0, p, r + 1) &&
             congruent(c, 0, p, 2 * r + 2);
    case Level::kK1:
      return congruent(g(0, 0), 1, p, 2 * r) && congruent(e, 1, p, 2 * r) && congruent(g(2, 2), 1, p, 2 * r) &&
             congruent(b, 0, p, 2 * r) && congruent(c, 0, p, 2 * r) && congruent(f, 0, p, 2 * r);
    case Level::kK0:
      return congruent(b, 0, p, r) && congruent(c, 0, p, r) && congruent(f, 0, p, r);
    default:
      throw std::logic_error("k_conditions: not a K-group");
  }
}

Level untwisted(Level level) {
  switch (level) {
    case Level::kV:
      return Level::kK;
    case Level::kV0:
      return Level::kK0;
    case Level::kV1:
      return Level::kK1;
    default:
      return level;
  }
}

bool is_twisted(Level level) { return level == Level::kV || level == Level::kV0 || level == Level::kV1; }

RatMatrix inverse3(const RatMatrix& g) {
  const Rat det = det3(g);
  if (det == 0) throw std::domain_error("inverse3: singular matrix");
  RatMatrix inv(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // Cofactor of (j, i).
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv(i, j) = (g(r0, c0) * g(r1, c1) - g(r0, c1) * g(r1, c0)) / det;
    }
  return inv;
}

}  // namespace

std::string to_string(Level level) {
  switch (level) {
    case Level::kK:
      return "K";
    case Level::kKPrime:
      return "K'";
    case Level::kV:
      return "V";
    case Level::kK0:
      return "K0";
    case Level::kK1:
      return "K1";
    case Level::kV0:
      return "V0";
    case Level::kV1:
      return "V1";
  }
  return "?";
}

Level parse_level(const std::string& name) {
  if (name == "K") return Level::kK;
  if (name == "K'" || name == "Kprime") return Level::kKPrime;
  if (name == "V") return Level::kV;
  if (name == "K0") return Level::kK0;
  if (name == "K1") return Level::kK1;
  if (name == "V0") return Level::kV0;
  if (name == "V1") return Level::kV1;
  throw std::invalid_argument("unknown level group: " + name);
}

bool is_p_integral(const Rat& q, std::int64_t p) {
  return mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

bool is_p_unit(const Rat& q, std::int64_t p) {
  return q != 0 && is_p_integral(q, p) &&
         mpz_divisible_ui_p(q.get_num().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

RatMatrix conj_tau(const RatMatrix& g, std::int64_t p, int r) {
  if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("conj_tau: need a 3x3 matrix");
  RatMatrix out = g;
  const Rat pp(static_cast<long>(p));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) *= rpow(pp, static_cast<long>(r) * (kWeights[j] - kWeights[i]));
  return out;
}

bool member(Level level, const RatMatrix& g, std::int64_t p, int r) {
  if (r < 0) throw std::invalid_argument("member: r must be >= 0");
  if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("member: need a 3x3 matrix");
  const RatMatrix h = is_twisted(level) ? conj_tau(g, p, -r) : g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!is_p_integral(h(i, j), p)) return false;
  if (!is_p_unit(det3(h), p)) return false;
  return k_conditions(untwisted(level), h, p, r);
}

bool member(Level level, const LevelElement& e, std::int64_t p, int r) {
  return is_p_unit(Rat(e.x), p) && member(level, e.g, p, r);
}

LevelElement random_member(Level level, std::int64_t p, int r, std::mt19937_64& rng) {
  if (is_twisted(level)) {
    LevelElement e = random_member(untwisted(level), p, r, rng);
    e.g = conj_tau(e.g, p, r);
    return e;
  }
  const Int modulus = ppow(p, 2 * r + 2);
  // exponent[i][j] >= 0 forces entry = target + p^exponent * t.
  int exponent[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  int target[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  auto force = [&](int i, int j, int e, int t) {
    exponent[i][j] = e;
    target[i][j] = t;
  };
  switch (level) {
    case Level::kK:
      force(1, 1, r, 1);
      force(0, 1, r, 0);
      force(1, 2, r, 0);
      force(0, 2, 2 * r, 0);
      break;
    case Level::kKPrime:
      force(1, 1, r, 1);
      force(0, 1, r + 1, 0);
      force(1, 2, r + 1, 0);
      force(0, 2, 2 * r + 2, 0);
      break;
    case Level::kK1:
      for (int i = 0; i < 3; ++i) force(i, i, 2 * r, 1);
      force(0, 1, 2 * r, 0);
      force(0, 2, 2 * r, 0);
      force(1, 2, 2 * r, 0);
      break;
    case Level::kK0:
      force(0, 1, r, 0);
      force(0, 2, r, 0);
      force(1, 2, r, 0);
      break;
    default:
      throw std::logic_error("random_member: unreachable");
  }
  std::uniform_int_distribution<long> unit_x(1, static_cast<long>(p) - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    LevelElement e;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Int t = uniform_below(modulus, rng);
        e.g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            Rat(target[i][j] + ppow(p, exponent[i][j]) * t);
      }
    if (!is_p_unit(det3(e.g), p)) continue;
    e.x = unit_x(rng) + static_cast<long>(p) * static_cast<long>(rng() % 1000);
    return e;
  }
  throw std::runtime_error("random_member: rejection sampling did not terminate");
}

RatMatrix tau_matrix(std::int64_t p) {
  RatMatrix t(3, 3);
  t(0, 0) = static_cast<long>(p * p);
  t(1, 1) = static_cast<long>(p);
  t(2, 2) = 1;
  return t;
}

RatMatrix gamma_r(std::int64_t p, int r) {
  RatMatrix g(3, 3);
  g(0, 2) = Rat(ppow(p, 2 * r));
  g(1, 0) = 1;
  g(2, 1) = 1;
  return g;
}

RatMatrix gamma_prime_r(std::int64_t p, int r) { return conj_tau(gamma_r(p, r), p, r); }

GammaReport verify_gamma(std::int64_t p, int r, int samples, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("verify_gamma: r must be >= 1");
  GammaReport rep;
  rep.p = p;
  rep.r = r;
  rep.samples = samples;
  const RatMatrix g = gamma_r(p, r);
  const RatMatrix gp = gamma_prime_r(p, r);
  RatMatrix scalar = RatMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) scalar(i, i) = Rat(ppow(p, 2 * r));
  rep.cube = g * g * g == scalar;
  rep.cube_prime = gp * gp * gp == scalar;
  RatMatrix target(3, 3);
  target(0, 0) = 1;
  target(1, 1) = static_cast<long>(p * p);
  target(2, 2) = static_cast<long>(p);
  const RatMatrix tau = tau_matrix(p);
  const RatMatrix g_inv = inverse3(g);
  const RatMatrix gp_inv = inverse3(gp);
  rep.tau = g * tau * g_inv == target;
  rep.tau_prime = gp * tau * gp_inv == target;
  std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(p * 100 + r));
  for (int i = 0; i < samples; ++i) {
    LevelElement k = random_member(Level::kK1, p, r, rng);
    if (member(Level::kK1, g * k.g * g_inv, p, r) && member(Level::kK1, g_inv * k.g * g, p, r))
      ++rep.k1_preserved;
    LevelElement v = random_member(Level::kV1, p, r, rng);
    if (member(Level::kV1, gp * v.g * gp_inv, p, r) && member(Level::kV1, gp_inv * v.g * gp, p, r))
      ++rep.v1_preserved;
  }
  return rep;
}

InclusionReport check_inclusion(Level small, int small_r, Level big, int big_r, std::int64_t p, int samples,
                                std::uint64_t seed) {
  InclusionReport rep{small, small_r, big, big_r, samples, 0, std::nullopt};
  std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(p * 100 + small_r * 10 + big_r));
  for (int i = 0; i < samples; ++i) {
    LevelElement e = random_member(small, p, small_r, rng);
    if (!member(big, e, p, big_r)) {
      ++rep.failures;
      if (!rep.witness) rep.witness = e;
    }
  }
  return rep;
}

InclusionReport check_kprime_intersection(std::int64_t p, int r, int samples, std::uint64_t seed) {
  InclusionReport rep{Level::kKPrime, r, Level::kK, r, samples, 0, std::nullopt};
  std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(p * 100 + r + 7));
  const RatMatrix tau = tau_matrix(p);
  const RatMatrix tau_inv = inverse3(tau);
  for (int i = 0; i < samples; ++i) {
    LevelElement e;
    switch (i % 3) {
      case 0:
        e = random_member(Level::kK, p, r, rng);
        break;
      case 1:
        e = random_member(Level::kKPrime, p, r, rng);
        break;
      default:
        e = random_member(Level::kK, p, r + 1, rng);
        break;
    }
    if (rng() % 2 == 0) {
      // Nudge one entry by a power of p to land near the boundary.
      const std::size_t a = rng() % 3, b = rng() % 3;
      e.g(a, b) += Rat(ppow(p, static_cast<int>(rng() % static_cast<unsigned>(2 * r + 3))));
    }
    const bool lhs = member(Level::kKPrime, e, p, r);
    const bool rhs = member(Level::kK, e, p, r) && member(Level::kK, LevelElement{tau_inv * e.g * tau, e.x}, p, r);
    if (lhs != rhs) {
      ++rep.failures;
      if (!rep.witness) rep.witness = e;
    }
  }
  return rep;
}

NormalityReport check_normality(Level sub, Level group, std::int64_t p, int r, int samples,
                                std::uint64_t seed) {
  NormalityReport rep{sub, group, samples, 0, std::nullopt, std::nullopt};
  std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(p * 100 + r + 13));
  for (int i = 0; i < samples; ++i) {
    LevelElement n = random_member(sub, p, r, rng);
    LevelElement g = random_member(group, p, r, rng);
    if (!member(sub, g.g * n.g * inverse3(g.g), p, r)) {
      ++rep.failures;
      if (!rep.n) {
        rep.n = n;
        rep.g = g;
      }
    }
  }
  return rep;
}

// ---- u^-1 Q_H^0 u ----------------------------------------------------------

QuadInt default_varpi(const FieldCtx& ctx, std::int64_t p) {
  for (long bound = 0; bound <= 64; ++bound)
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b) {
        if (std::max(std::labs(a), std::labs(b)) != bound) continue;
        QuadInt z{a, b};
        if (ctx.norm(z) == p) return z;
      }
  throw std::invalid_argument("default_varpi: no element of norm p found (non-principal prime?)");
}

std::vector<std::int64_t> omega_embeddings(const FieldCtx& ctx, std::int64_t p, int s) {
  if (ctx.split_type(p) != SplitType::kSplit) throw std::invalid_argument("omega_embeddings: p must split");
  const Int m = ppow(p, s);
  const Int t = ctx.omega_trace();
  const Int n = ctx.omega_norm();
  std::vector<std::int64_t> roots;
  for (std::int64_t r0 = 0; r0 < p; ++r0) {
    Int x = r0;
    if (mod(x * x - t * x + n, Int(static_cast<long>(p))) != 0) continue;
    // Newton steps double the precision; the root is simple since p splits.
    for (int step = 0; step < 2 * s + 2; ++step) {
      Int fx = mod(x * x - t * x + n, m);
      if (fx == 0) break;
      x = mod(x - fx * inverse_mod(mod(2 * x - t, m), m), m);
    }
    roots.push_back(x.get_si());
  }
  return roots;
}

std::vector<std::int64_t> lemma46_conjugate(std::int64_t a, std::int64_t b, std::int64_t x,
                                            std::int64_t delta, std::int64_t varpi, std::int64_t modulus) {
  auto md = [modulus](__int128 v) {
    v %= modulus;
    if (v < 0) v += modulus;
    return static_cast<std::int64_t>(v);
  };
  std::vector<std::int64_t> m(9, 0);
  m[0] = md(a);
  m[1] = md(static_cast<__int128>(a - 1) * delta + b);
  m[2] = md(static_cast<__int128>(a) * varpi + b - delta + static_cast<__int128>(x) * md(delta - varpi));
  m[4] = 1 % modulus;
  m[5] = md(1 - x);
  m[8] = md(x);
  return m;
}

Lemma46Report lemma46_check(const FieldCtx& ctx, const Lemma46Options& options) {
  if (options.s < 1) throw std::invalid_argument("lemma46_check: s must be >= 1");
  const std::int64_t p = options.p;
  const Int big_m = ppow(p, options.s);
  if (big_m > Int(1L << 20)) throw std::invalid_argument("lemma46_check: p^s too large for a sweep");
  const std::int64_t m = big_m.get_si();
  Lemma46Report rep;
  rep.p = p;
  rep.s = options.s;
  rep.varpi = options.varpi ? *options.varpi : default_varpi(ctx, p);
  if (mod(ctx.norm(rep.varpi), Int(static_cast<long>(p))) != 0)
    throw std::invalid_argument("lemma46_check: varpi must lie in a prime above p");
  const std::vector<std::int64_t> roots = omega_embeddings(ctx, p, options.s);
  auto iota = [&](const QuadInt& z, std::int64_t w) { return mod(z.a + z.b * w, big_m).get_si(); };
  bool found = false;
  for (std::int64_t w : roots) {
    const bool wanted = options.omega_residue ? (w % p == mod(*options.omega_residue, p))
                                              : iota(rep.varpi, w) % p == 0;
    if (wanted) {
      rep.iota_omega = w;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("lemma46_check: no embedding matches the requested choice");
  // delta = 2w - 1 when w = (1 + delta)/2, else delta = w.
  const QuadInt delta = ctx.half_integral_basis() ? QuadInt{-1, 2} : QuadInt{0, 1};
  rep.iota_delta = iota(delta, rep.iota_omega);
  rep.iota_varpi = iota(rep.varpi, rep.iota_omega);
  for (std::int64_t a = 1; a < m; ++a) {
    if (a % p == 0) continue;
    for (std::int64_t b = 0; b < m; ++b) {
      const std::int64_t e12 = static_cast<std::int64_t>((static_cast<__int128>(a - 1) * rep.iota_delta + b) % m);
      for (std::int64_t x = 1; x < m; ++x) {
        if (x % p == 0) continue;
        ++rep.checked;
        if (e12 != 0) continue;
        const std::vector<std::int64_t> c = lemma46_conjugate(a, b, x, rep.iota_delta, rep.iota_varpi, m);
        if (c[1] != 0 || c[2] != 0 || c[5] != 0) continue;
        ++rep.solution_count;
        if (rep.solutions.size() < options.max_listed) rep.solutions.push_back({a, b, x});
      }
    }
  }
  return rep;
}

}  // namespace picard
