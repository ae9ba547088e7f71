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


#include "picard/big_pairing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "picard/rng.hpp"

namespace picard {

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 v = static_cast<__int128>(a) * b % m;
  if (v < 0) v += m;
  return static_cast<std::int64_t>(v);
}

std::int64_t mod_pow(std::int64_t a, std::uint64_t e, std::int64_t m) {
  std::int64_t base = ((a % m) + m) % m;
  std::int64_t r = 1 % m;
  while (e > 0) {
    if (e & 1U) r = mod_mul(r, base, m);
    base = mod_mul(base, base, m);
    e >>= 1U;
  }
  return r;
}

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::int64_t{1} << 62) / b) throw std::overflow_error("p^M exceeds 2^62");
    r *= b;
  }
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = std::gcd(reduce(a, m), m);
  if (g != 1) throw std::domain_error("mod_inverse: not a unit");
  return inverse_mod(Int(static_cast<long>(reduce(a, m))), Int(static_cast<long>(m))).get_si();
}

std::int64_t dot_form(const ModMatrix& f, const ModVec& x, const ModVec& y) {
  const std::int64_t m = f.modulus();
  __int128 total = 0;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (x[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < f.cols(); ++j) row += static_cast<__int128>(f(i, j)) * y[j];
    total = (total + static_cast<__int128>(x[i]) * (row % m)) % m;
  }
  return reduce(static_cast<std::int64_t>(total), m);
}

void check_vec(const ModVec& v, std::size_t dim, const char* what) {
  if (v.size() != dim) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

// ---- ModMatrix --------------------------------------------------------------

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus < 1) throw std::invalid_argument("ModMatrix: modulus must be positive");
}

ModMatrix ModMatrix::identity(std::size_t n, std::int64_t modulus) { return scalar(n, 1, modulus); }

ModMatrix ModMatrix::scalar(std::size_t n, std::int64_t c, std::int64_t modulus) {
  ModMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

void ModMatrix::set(std::size_t i, std::size_t j, std::int64_t v) { (*this)(i, j) = reduce(v, modulus_); }

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols_ != b.rows_ || a.modulus_ != b.modulus_) throw std::invalid_argument("ModMatrix: shape mismatch");
  ModMatrix c(a.rows_, b.cols_, a.modulus_);
  std::vector<__int128> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + static_cast<__int128>(aik) * b(k, j)) % a.modulus_;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<std::int64_t>(acc[j]);
  }
  return c;
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.modulus_ != b.modulus_)
    throw std::invalid_argument("ModMatrix: shape mismatch");
  ModMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = (a.data_[i] + b.data_[i]) % a.modulus_;
  return c;
}

ModMatrix ModMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("ModMatrix::pow: non-square");
  ModMatrix r = identity(rows_, modulus_);
  ModMatrix b = *this;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

ModMatrix ModMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("ModMatrix::inverse: non-square");
  const std::size_t n = rows_;
  ModMatrix a = *this;
  ModMatrix inv = identity(n, modulus_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (std::gcd(a(i, col), modulus_) == 1) {
        piv = i;
        break;
      }
    if (piv == n) throw std::domain_error("ModMatrix::inverse: determinant is not a unit");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(col, j));
      std::swap(inv(piv, j), inv(col, j));
    }
    const std::int64_t s = mod_inverse(a(col, col), modulus_);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = mod_mul(a(col, j), s, modulus_);
      inv(col, j) = mod_mul(inv(col, j), s, modulus_);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const std::int64_t f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = reduce(a(i, j) - mod_mul(f, a(col, j), modulus_), modulus_);
        inv(i, j) = reduce(inv(i, j) - mod_mul(f, inv(col, j), modulus_), modulus_);
      }
    }
  }
  return inv;
}

ModVec ModMatrix::apply(const ModVec& v) const {
  check_vec(v, cols_, "ModMatrix::apply");
  ModVec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<__int128>((*this)(i, j)) * v[j]) % modulus_;
    out[i] = reduce(static_cast<std::int64_t>(acc), modulus_);
  }
  return out;
}

// ---- GroupRingElt -------------------------------------------------------------

GroupRingElt::GroupRingElt(std::int64_t p, int r, int precision) : p_(p), r_(r), m_(precision) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("GroupRingElt: p must be an odd prime");
  if (r < 1 || precision < 1) throw std::invalid_argument("GroupRingElt: r and M must be >= 1");
  modulus_ = ipow64(p, precision);
  coeffs_.assign(static_cast<std::size_t>(ipow64(p, r - 1)), 0);
}

GroupRingElt GroupRingElt::group_element(std::int64_t p, int r, int precision, std::int64_t log_index) {
  GroupRingElt g(p, r, precision);
  g.set(log_index, 1);
  return g;
}

GroupRingElt GroupRingElt::norm_element(std::int64_t p, int r, int precision) {
  GroupRingElt g(p, r, precision);
  std::fill(g.coeffs_.begin(), g.coeffs_.end(), 1 % g.modulus_);
  return g;
}

std::int64_t GroupRingElt::coeff(std::int64_t log_index) const {
  return coeffs_[static_cast<std::size_t>(reduce(log_index, order()))];
}

void GroupRingElt::set(std::int64_t log_index, std::int64_t v) {
  coeffs_[static_cast<std::size_t>(reduce(log_index, order()))] = reduce(v, modulus_);
}

void GroupRingElt::add_to(std::int64_t log_index, std::int64_t v) {
  std::int64_t& c = coeffs_[static_cast<std::size_t>(reduce(log_index, order()))];
  c = reduce(c + reduce(v, modulus_), modulus_);
}

bool GroupRingElt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

GroupRingElt GroupRingElt::involution() const {
  GroupRingElt out(p_, r_, m_);
  for (std::int64_t i = 0; i < order(); ++i) out.set(-i, coeffs_[static_cast<std::size_t>(i)]);
  return out;
}

GroupRingElt GroupRingElt::project() const {
  if (r_ < 2) throw std::invalid_argument("GroupRingElt::project: r must be >= 2");
  GroupRingElt out(p_, r_ - 1, m_);
  for (std::int64_t i = 0; i < order(); ++i) out.add_to(i, coeffs_[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

void check_same(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.p() != b.p() || a.r() != b.r() || a.precision() != b.precision())
    throw std::invalid_argument("GroupRingElt: mismatched rings");
}

}  // namespace

GroupRingElt operator+(const GroupRingElt& a, const GroupRingElt& b) {
  check_same(a, b);
  GroupRingElt c = a;
  for (std::int64_t i = 0; i < a.order(); ++i) c.add_to(i, b.coeffs_[static_cast<std::size_t>(i)]);
  return c;
}

GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b) { return a + (-1) * b; }

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
  check_same(a, b);
  GroupRingElt c(a.p_, a.r_, a.m_);
  const std::int64_t n = a.order();
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj != 0) c.add_to((i + j) % n, mod_mul(ai, bj, a.modulus_));
    }
  }
  return c;
}

GroupRingElt operator*(std::int64_t s, const GroupRingElt& a) {
  GroupRingElt c = a;
  for (std::int64_t& x : c.coeffs_) x = mod_mul(x, reduce(s, a.modulus_), a.modulus_);
  return c;
}

std::int64_t gamma_value(std::int64_t p, int r, std::int64_t log_index) {
  const std::int64_t m = ipow64(p, r);
  return mod_pow(1 + p, static_cast<std::uint64_t>(reduce(log_index, ipow64(p, r - 1))), m);
}

std::int64_t gamma_log(std::int64_t p, int r, std::int64_t s) {
  const std::int64_t m = ipow64(p, r);
  const std::int64_t target = reduce(s, m);
  if (target % p != 1 % p) throw std::invalid_argument("gamma_log: s must be 1 mod p");
  std::int64_t v = 1 % m;
  const std::int64_t order = ipow64(p, r - 1);
  for (std::int64_t i = 0; i < order; ++i) {
    if (v == target) return i;
    v = mod_mul(v, 1 + p, m);
  }
  throw std::logic_error("gamma_log: element not found");
}

// ---- contexts ---------------------------------------------------------------

const LevelModel& PairingContext::level(int r) const {
  if (r < 1 || r > max_level()) throw std::invalid_argument("PairingContext: level out of range");
  return levels[static_cast<std::size_t>(r - 1)];
}

ContextCheck check_context(const PairingContext& ctx) {
  ContextCheck out;
  auto fail = [&](const std::string& what) {
    out.ok = false;
    out.failures.push_back(what);
  };
  if (ctx.levels.empty()) fail("no levels");
  if (ctx.push.size() + 1 != ctx.levels.size() || ctx.pull.size() + 1 != ctx.levels.size())
    fail("tower maps: need R - 1 push and pull maps");
  if (!out.ok) return out;
  const std::int64_t m = ctx.modulus;
  for (int r = 1; r <= ctx.max_level(); ++r) {
    const LevelModel& lv = ctx.level(r);
    const std::string tag = "r=" + std::to_string(r) + ": ";
    const std::size_t n = lv.dim();
    auto square = [&](const ModMatrix& a) { return a.rows() == n && a.cols() == n && a.modulus() == m; };
    if (!square(lv.form) || !square(lv.diamond) || !square(lv.lambda_push) || !square(lv.lambda_pull) ||
        !square(lv.up) || (lv.hecke && !square(*lv.hecke))) {
      fail(tag + "operator shapes");
      continue;
    }
    const std::uint64_t order = static_cast<std::uint64_t>(ipow64(ctx.p, r - 1));
    if (lv.diamond.pow(order) != ModMatrix::identity(n, m)) fail(tag + "diamond order");
    if (lv.diamond.transpose() * lv.form * lv.diamond != lv.form) fail(tag + "diamond isometry");
    ModMatrix form_inv;
    try {
      form_inv = lv.form.inverse();
    } catch (const std::domain_error&) {
      fail(tag + "degenerate form");
      continue;
    }
    const ModMatrix up_star = form_inv * lv.up.transpose() * lv.form;
    if (lv.lambda_pull * up_star * lv.lambda_push != lv.up) fail(tag + "U' = lambda^* U'^* lambda_*");
    if (lv.hecke) {
      const ModMatrix& t = *lv.hecke;
      if (t.transpose() * lv.form != lv.form * t) fail(tag + "Hecke operator not self-adjoint");
      if (t * lv.diamond != lv.diamond * t || t * lv.lambda_push != lv.lambda_push * t || t * lv.up != lv.up * t)
        fail(tag + "Hecke operator does not commute");
    }
  }
  for (int r = 1; r < ctx.max_level(); ++r) {
    const LevelModel& lo = ctx.level(r);
    const LevelModel& hi = ctx.level(r + 1);
    const ModMatrix& push = ctx.push[static_cast<std::size_t>(r - 1)];
    const ModMatrix& pull = ctx.pull[static_cast<std::size_t>(r - 1)];
    const std::string tag = "tower " + std::to_string(r + 1) + "->" + std::to_string(r) + ": ";
    if (push.rows() != lo.dim() || push.cols() != hi.dim() || pull.rows() != hi.dim() || pull.cols() != lo.dim()) {
      fail(tag + "shapes");
      continue;
    }
    if (pull.transpose() * hi.form != lo.form * push) fail(tag + "pi^* not adjoint to pi_*");
    const std::uint64_t step = static_cast<std::uint64_t>(ipow64(ctx.p, r - 1));
    ModMatrix fiber(hi.dim(), hi.dim(), ctx.modulus);
    const ModMatrix kappa = hi.diamond.pow(step);
    ModMatrix power = ModMatrix::identity(hi.dim(), ctx.modulus);
    for (std::int64_t t = 0; t < ctx.p; ++t) {
      fiber = fiber + power;
      power = power * kappa;
    }
    if (pull * push != fiber) fail(tag + "pi^* pi_* is not the fiber norm");
    if (push * hi.diamond != lo.diamond * push) fail(tag + "pi_* not diamond equivariant");
    if (push * hi.up != lo.up * push) fail(tag + "pi_* does not commute with U'");
    const ModMatrix w_hi = hi.lambda_push * hi.up.pow(static_cast<std::uint64_t>(r + 1));
    const ModMatrix w_lo = lo.lambda_push * lo.up.pow(static_cast<std::uint64_t>(r));
    if (push * w_hi != w_lo * push) fail(tag + "pi_* does not intertwine lambda_* U'^r");
  }
  return out;
}

PairingContext regular_context(const RegularModelOptions& o) {
  if (o.rank < 1) throw std::invalid_argument("regular_context: rank must be >= 1");
  if (o.max_level < 1) throw std::invalid_argument("regular_context: need at least one level");
  PairingContext ctx;
  ctx.p = o.p;
  ctx.precision = o.precision;
  GroupRingElt probe(o.p, 1, o.precision);  // validates p and M
  const std::int64_t m = probe.modulus();
  ctx.modulus = m;
  std::mt19937_64 rng = make_rng(o.seed, 0x6265);
  auto random_unit = [&]() {
    while (true) {
      std::int64_t v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
      if (v % o.p != 0) return v;
    }
  };
  const std::size_t d = o.rank;
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  ModMatrix pm(d, d, m);
  for (std::size_t j = 0; j < d; ++j) pm(perm[j], j) = 1;
  const ModMatrix sym = pm + pm.transpose();
  auto poly = [&](std::int64_t a0, std::int64_t a1) { return ModMatrix::scalar(d, a0, m) + ModMatrix::scalar(d, a1, m) * sym; };
  ModMatrix g;
  while (true) {
    g = poly(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)),
             static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)));
    try {
      (void)g.inverse();
      break;
    } catch (const std::domain_error&) {
    }
  }
  const ModMatrix hecke_a = poly(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)),
                                 static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m)));
  const std::int64_t top_order = ipow64(o.p, o.max_level - 1);
  const std::int64_t shift = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(top_order));
  const std::int64_t u = o.up_scalar ? reduce(*o.up_scalar, m) : random_unit();
  if (u % o.p == 0) throw std::invalid_argument("regular_context: U' must be a unit");
  const std::int64_t u_inv = mod_inverse(u, m);

  for (int r = 1; r <= o.max_level; ++r) {
    const std::int64_t ord = ipow64(o.p, r - 1);
    const std::size_t n = d * static_cast<std::size_t>(ord);
    auto idx = [ord](std::size_t j, std::int64_t i) { return j * static_cast<std::size_t>(ord) + static_cast<std::size_t>(reduce(i, ord)); };
    LevelModel lv;
    lv.form = ModMatrix(n, n, m);
    lv.diamond = ModMatrix(n, n, m);
    ModMatrix perm_shift(n, n, m);
    ModMatrix t(n, n, m);
    for (std::size_t j = 0; j < d; ++j)
      for (std::int64_t i = 0; i < ord; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
          lv.form(idx(j, i), idx(k, i)) = g(j, k);
          t(idx(j, i), idx(k, i)) = hecke_a(j, k);
        }
        lv.diamond(idx(j, i + 1), idx(j, i)) = 1;
        perm_shift(idx(perm[j], i + shift), idx(j, i)) = 1;
      }
    lv.lambda_push = ModMatrix::scalar(n, mod_pow(u_inv, static_cast<std::uint64_t>(r), m), m) * perm_shift;
    lv.lambda_pull = lv.lambda_push.inverse();
    lv.up = ModMatrix::scalar(n, u, m);
    if (o.with_hecke) lv.hecke = t;
    ctx.levels.push_back(std::move(lv));
  }
  for (int r = 1; r < o.max_level; ++r) {
    const std::int64_t lo = ipow64(o.p, r - 1);
    const std::int64_t hi = lo * o.p;
    ModMatrix push(d * static_cast<std::size_t>(lo), d * static_cast<std::size_t>(hi), m);
    for (std::size_t j = 0; j < d; ++j)
      for (std::int64_t i = 0; i < hi; ++i)
        push(j * static_cast<std::size_t>(lo) + static_cast<std::size_t>(i % lo), j * static_cast<std::size_t>(hi) + static_cast<std::size_t>(i)) = 1;
    ctx.pull.push_back(push.transpose());
    ctx.push.push_back(std::move(push));
  }
  return ctx;
}

PairingContext trivial_context(std::int64_t p, int precision, int max_level) {
  if (max_level < 1) throw std::invalid_argument("trivial_context: need at least one level");
  PairingContext ctx;
  ctx.p = p;
  ctx.precision = precision;
  ctx.modulus = GroupRingElt(p, 1, precision).modulus();
  const std::int64_t m = ctx.modulus;
  for (int r = 1; r <= max_level; ++r) {
    const std::int64_t ord = ipow64(p, r - 1);
    const std::size_t n = static_cast<std::size_t>(ord);
    const ModMatrix one = ModMatrix::identity(n, m);
    ModMatrix shift(n, n, m);
    for (std::int64_t i = 0; i < ord; ++i) shift(static_cast<std::size_t>((i + 1) % ord), static_cast<std::size_t>(i)) = 1;
    ctx.levels.push_back(LevelModel{one, shift, one, one, one, std::nullopt});
  }
  for (int r = 1; r < max_level; ++r) {
    const std::int64_t lo = ipow64(p, r - 1);
    ModMatrix push(static_cast<std::size_t>(lo), static_cast<std::size_t>(lo * p), m);
    for (std::int64_t i = 0; i < lo * p; ++i) push(static_cast<std::size_t>(i % lo), static_cast<std::size_t>(i)) = 1;
    ctx.pull.push_back(push.transpose());
    ctx.push.push_back(std::move(push));
  }
  return ctx;
}

ModVec apply_power(const ModMatrix& m, const ModVec& x, std::int64_t e) {
  if (e < 0) return m.inverse().pow(static_cast<std::uint64_t>(-e)).apply(x);
  return m.pow(static_cast<std::uint64_t>(e)).apply(x);
}

ModVec diamond_act(const PairingContext& ctx, int r, const ModVec& x, std::int64_t log_index) {
  const LevelModel& lv = ctx.level(r);
  const std::int64_t ord = ipow64(ctx.p, r - 1);
  return lv.diamond.pow(static_cast<std::uint64_t>(reduce(log_index, ord))).apply(x);
}

GroupRingElt pair_r(const PairingContext& ctx, int r, const ModVec& x, const ModVec& y) {
  const LevelModel& lv = ctx.level(r);
  check_vec(x, lv.dim(), "pair_r");
  check_vec(y, lv.dim(), "pair_r");
  const ModVec w = lv.lambda_push.apply(lv.up.pow(static_cast<std::uint64_t>(r)).apply(y));
  GroupRingElt out(ctx.p, r, ctx.precision);
  ModVec xs = x;
  for (std::int64_t i = 0; i < out.order(); ++i) {
    out.set(-i, dot_form(lv.form, xs, w));
    xs = lv.diamond.apply(xs);
  }
  return out;
}

bool PairingProperties::all_pass() const {
  return semilinear == instances && semilinear_second == instances && hecke == instances && diagram == instances;
}

PairingProperties pairing_properties(const PairingContext& ctx, int instances, std::uint64_t seed) {
  if (ctx.max_level() < 2) throw std::invalid_argument("pairing_properties: need at least two levels");
  std::mt19937_64 rng = make_rng(seed, 0x7061);
  auto random_vec = [&](std::size_t n) {
    ModVec v(n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ctx.modulus));
    return v;
  };
  PairingProperties out;
  out.instances = instances;
  for (int t = 0; t < instances; ++t) {
    const int r = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.max_level() - 1));
    const LevelModel& lv = ctx.level(r);
    const ModVec x = random_vec(lv.dim());
    const ModVec y = random_vec(lv.dim());
    const std::int64_t i = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ipow64(ctx.p, r - 1)));
    const GroupRingElt xy = pair_r(ctx, r, x, y);
    const GroupRingElt s = GroupRingElt::group_element(ctx.p, r, ctx.precision, i);
    if (pair_r(ctx, r, diamond_act(ctx, r, x, i), y) == s * xy) ++out.semilinear;
    if (pair_r(ctx, r, x, diamond_act(ctx, r, y, i)) == s.involution() * xy) ++out.semilinear_second;
    if (lv.hecke && pair_r(ctx, r, lv.hecke->apply(x), y) == pair_r(ctx, r, x, lv.hecke->apply(y))) ++out.hecke;
    const ModMatrix& push = ctx.push[static_cast<std::size_t>(r - 2)];
    if (xy.project() == pair_r(ctx, r - 1, push.apply(x), push.apply(y))) ++out.diagram;
  }
  return out;
}

std::optional<int> check_tower(const PairingContext& ctx, const BigClass& b) {
  if (static_cast<int>(b.tower.size()) != ctx.max_level())
    throw std::invalid_argument("check_tower: tower length differs from the context");
  for (int r = 1; r <= ctx.max_level(); ++r) check_vec(b.tower[static_cast<std::size_t>(r - 1)], ctx.level(r).dim(), "check_tower");
  for (int r = 1; r < ctx.max_level(); ++r) {
    const ModVec lhs = ctx.push[static_cast<std::size_t>(r - 1)].apply(b.tower[static_cast<std::size_t>(r)]);
    const ModVec rhs = ctx.level(r).up.apply(b.tower[static_cast<std::size_t>(r - 1)]);
    if (lhs != rhs) return r;
  }
  return std::nullopt;
}

const ModVec& project_tower(const BigClass& b, int r) {
  if (r < 1 || r > static_cast<int>(b.tower.size())) throw std::invalid_argument("project_tower: level out of range");
  return b.tower[static_cast<std::size_t>(r - 1)];
}

BigClass tower_from_top(const PairingContext& ctx, const ModVec& top) {
  const int big_r = ctx.max_level();
  check_vec(top, ctx.level(big_r).dim(), "tower_from_top");
  BigClass b;
  b.tower.assign(static_cast<std::size_t>(big_r), {});
  b.tower[static_cast<std::size_t>(big_r - 1)] = top;
  for (int r = big_r - 1; r >= 1; --r) {
    const ModVec pushed = ctx.push[static_cast<std::size_t>(r - 1)].apply(b.tower[static_cast<std::size_t>(r)]);
    b.tower[static_cast<std::size_t>(r - 1)] = ctx.level(r).up.inverse().apply(pushed);
  }
  return b;
}

PhiExpansion phi_expansion(const PairingContext& ctx, const std::vector<BigClass>& xis, const BigClass& zeta,
                           std::int64_t n_terms, std::int64_t tame_level, std::int64_t char_disc) {
  if (n_terms < 0 || static_cast<std::int64_t>(xis.size()) < n_terms)
    throw std::invalid_argument("phi_expansion: not enough classes for the truncation");
  if (auto bad = check_tower(ctx, zeta)) throw std::invalid_argument("phi_expansion: zeta tower fails at rung " + std::to_string(*bad));
  for (std::int64_t n = 1; n <= n_terms; ++n)
    if (auto bad = check_tower(ctx, xis[static_cast<std::size_t>(n - 1)]))
      throw std::invalid_argument("phi_expansion: tower for n=" + std::to_string(n) + " fails at rung " + std::to_string(*bad));
  PhiExpansion phi;
  phi.p = ctx.p;
  phi.precision = ctx.precision;
  phi.tame_level = tame_level;
  phi.char_disc = char_disc;
  const int big_r = ctx.max_level();
  std::vector<ModMatrix> normalizer;
  std::vector<ModVec> zeta_norm;
  for (int r = 1; r <= big_r; ++r) {
    normalizer.push_back(ctx.level(r).up.inverse().pow(static_cast<std::uint64_t>(r)));
    zeta_norm.push_back(normalizer.back().apply(project_tower(zeta, r)));
  }
  phi.coeffs.resize(static_cast<std::size_t>(n_terms) + 1);
  for (int r = 1; r <= big_r; ++r) phi.coeffs[0].emplace_back(ctx.p, r, ctx.precision);
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const BigClass& x = xis[static_cast<std::size_t>(n - 1)];
    for (int r = 1; r <= big_r; ++r) {
      const ModVec xr = normalizer[static_cast<std::size_t>(r - 1)].apply(project_tower(x, r));
      phi.coeffs[static_cast<std::size_t>(n)].push_back(pair_r(ctx, r, xr, zeta_norm[static_cast<std::size_t>(r - 1)]));
    }
  }
  return phi;
}

std::optional<std::pair<std::int64_t, int>> check_coherence(const PhiExpansion& phi) {
  for (std::int64_t n = 0; n <= phi.trunc(); ++n) {
    const auto& row = phi.coeffs[static_cast<std::size_t>(n)];
    for (std::size_t r = 1; r < row.size(); ++r)
      if (row[r].project() != row[r - 1]) return std::make_pair(n, static_cast<int>(r));
  }
  return std::nullopt;
}

std::int64_t norm_character_sum(std::int64_t p, int r, int k, int precision) {
  const std::int64_t m = ipow64(p, precision);
  const std::int64_t order = ipow64(p, r - 1);
  const std::int64_t step = mod_pow(1 + p, static_cast<std::uint64_t>(2 * k), m);
  std::int64_t term = 1 % m, total = 0;
  for (std::int64_t i = 0; i < order; ++i) {
    total = reduce(total + term, m);
    term = mod_mul(term, step, m);
  }
  return total;
}

QExpansion nu_specialize(const PhiExpansion& phi, int k, int r) {
  if (k < 0) throw std::invalid_argument("nu_specialize: k must be >= 0");
  if (r < 1 || r > phi.max_level()) throw std::invalid_argument("nu_specialize: level out of range");
  const std::int64_t m = ipow64(phi.p, phi.precision);
  const std::int64_t step = mod_pow(1 + phi.p, static_cast<std::uint64_t>(2 * k), m);
  std::vector<Rat> c(static_cast<std::size_t>(phi.trunc()) + 1);
  for (std::int64_t n = 0; n <= phi.trunc(); ++n) {
    const GroupRingElt& e = phi.coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(r - 1)];
    std::int64_t total = 0, chi = 1 % m;
    for (std::int64_t i = 0; i < e.order(); ++i) {
      total = reduce(total + mod_mul(e.coeffs()[static_cast<std::size_t>(i)], chi, m), m);
      chi = mod_mul(chi, step, m);
    }
    c[static_cast<std::size_t>(n)] = total;
  }
  return QExpansion(std::move(c), 2 * k + 3, ipow64(phi.p, r) * phi.tame_level, phi.char_disc,
                    Int(static_cast<long>(m)));
}

namespace {

// c [1] at every level; pi_* keeps the identity coordinate.
BigClass identity_tower(const PairingContext& ctx, std::int64_t c) {
  BigClass b;
  for (int r = 1; r <= ctx.max_level(); ++r) {
    ModVec v(ctx.level(r).dim(), 0);
    v[0] = reduce(c, ctx.modulus);
    b.tower.push_back(std::move(v));
  }
  return b;
}

}  // namespace

SeriesBinding bind_series(const SeriesParams& params, std::int64_t p, int precision, int max_level) {
  SeriesParams base = params;
  base.weight_k = 0;
  base.constant_term = 0;
  const QExpansion series = cusp_series(base);
  SeriesBinding b;
  b.ctx = trivial_context(p, precision, max_level);
  const Int m(static_cast<long>(b.ctx.modulus));
  for (std::int64_t n = 1; n <= series.trunc(); ++n) {
    const std::int64_t c = rat_mod(series[n], m).get_si();
    b.xis.push_back(identity_tower(b.ctx, c));
  }
  b.zeta = identity_tower(b.ctx, 1);
  b.phi = phi_expansion(b.ctx, b.xis, b.zeta, series.trunc(), params.ctx.abs_disc(), params.ctx.disc());
  return b;
}

ShadowReport series_shadow(const SeriesBinding& binding, const SeriesParams& params, int k, int r,
                           std::int64_t n_terms) {
  ShadowReport rep;
  rep.k = k;
  rep.r = r;
  SeriesParams hp = params;
  hp.weight_k = k;
  hp.n_terms = n_terms;
  const QExpansion hw = higher_weight_series(hp);
  const QExpansion nu = nu_specialize(binding.phi, k, r);
  if (nu.trunc() < n_terms) throw std::invalid_argument("series_shadow: binding is shorter than n_terms");
  const Int m(static_cast<long>(binding.ctx.modulus));
  const Rat dd = params.form.disc_lattice * params.form.disc_dual;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const Rat bump = rpow(Rat(n), k) * rpow(dd, -k);
    const Int lhs = mod(nu[n].get_num() * rat_mod(bump, m), m);
    const Int rhs = rat_mod(hw[n], m);
    ++rep.checked;
    if (lhs != rhs) {
      ++rep.mismatches;
      if (!rep.first_mismatch) rep.first_mismatch = n;
    }
  }
  return rep;
}

}  // namespace picard
