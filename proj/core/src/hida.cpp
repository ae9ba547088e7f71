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


#include "picard/hida.hpp"

#include <stdexcept>
#include <utility>

namespace picard {

PadicCtx PadicCtx::make(std::int64_t p, int precision, const std::optional<FieldCtx>& field) {
  if (!is_prime(p)) throw std::invalid_argument("PadicCtx: p must be prime");
  if (precision < 1) throw std::invalid_argument("PadicCtx: precision must be >= 1");
  if (field && field->split_type(p) != SplitType::kSplit)
    throw std::invalid_argument("PadicCtx: p must split in K");
  PadicCtx c;
  c.p_ = p;
  c.m_ = precision;
  c.modulus_ = ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(precision));
  return c;
}

Int ArithPoint::gamma_value(const PadicCtx& ctx) const {
  return pow_mod(Int(static_cast<long>(1 + ctx.p())), k, ctx.modulus());
}

IwasawaFn IwasawaFn::constant(const Int& c) {
  IwasawaAtom a;
  a.kind = IwasawaAtom::Kind::kConstant;
  a.value = c;
  return IwasawaFn(std::move(a));
}

IwasawaFn IwasawaFn::divisor_sum(std::int64_t n, std::int64_t disc, std::int64_t shift) {
  if (n < 1) throw std::invalid_argument("divisor_sum: n must be positive");
  IwasawaAtom a;
  a.kind = IwasawaAtom::Kind::kDivisorSum;
  a.n = n;
  a.disc = disc;
  a.shift = shift;
  return IwasawaFn(std::move(a));
}

IwasawaFn IwasawaFn::polynomial_t(std::vector<Int> coeffs) {
  IwasawaAtom a;
  a.kind = IwasawaAtom::Kind::kPolynomialT;
  a.coeffs = std::move(coeffs);
  return IwasawaFn(std::move(a));
}

IwasawaFn IwasawaFn::polynomial_k(std::vector<Int> coeffs) {
  IwasawaAtom a;
  a.kind = IwasawaAtom::Kind::kPolynomialK;
  a.coeffs = std::move(coeffs);
  return IwasawaFn(std::move(a));
}

namespace {

Int horner(const std::vector<Int>& coeffs, const Int& x, const Int& m) {
  Int v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = mod(v * x + *it, m);
  return v;
}

Int eval_atom(const IwasawaAtom& a, const PadicCtx& ctx, std::int64_t k) {
  const Int& m = ctx.modulus();
  switch (a.kind) {
    case IwasawaAtom::Kind::kConstant:
      return mod(a.value, m);
    case IwasawaAtom::Kind::kDivisorSum: {
      Int s = 0;
      const Int disc(static_cast<long>(a.disc));
      for (std::int64_t d = 1; d * d <= a.n; ++d) {
        if (a.n % d != 0) continue;
        for (std::int64_t e : {d, a.n / d}) {
          if (e % ctx.p() == 0) continue;
          int c = a.disc == 1 ? 1 : kronecker(disc, Int(static_cast<long>(e)));
          if (c != 0) s += c * pow_mod(Int(static_cast<long>(e)), k + a.shift, m);
          if (d * d == a.n) break;
        }
      }
      return mod(s, m);
    }
    case IwasawaAtom::Kind::kPolynomialT: {
      Int t = mod(ArithPoint{k}.gamma_value(ctx) - 1, m);
      return horner(a.coeffs, t, m);
    }
    case IwasawaAtom::Kind::kPolynomialK:
      return horner(a.coeffs, Int(static_cast<long>(k)), m);
  }
  throw std::logic_error("eval_atom: unknown kind");
}

void check_compatible(const LambdaFamily& f, std::int64_t n_terms) {
  if (n_terms < 0 || n_terms > f.trunc())
    throw std::invalid_argument("family truncation is shorter than requested");
}

}  // namespace

Int IwasawaFn::eval(const PadicCtx& ctx, std::int64_t k) const {
  Int v = 1;
  for (const IwasawaAtom& a : factors_) {
    v = mod(v * eval_atom(a, ctx, k), ctx.modulus());
    if (v == 0) break;
  }
  return mod(v, ctx.modulus());
}

bool IwasawaFn::is_zero_constant() const {
  for (const IwasawaAtom& a : factors_)
    if (a.kind == IwasawaAtom::Kind::kConstant && a.value == 0) return true;
  return false;
}

IwasawaFn operator*(const IwasawaFn& a, const IwasawaFn& b) {
  IwasawaFn r = a;
  r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
  return r;
}

LambdaFamily eisenstein_family(const FieldCtx& ctx, const PadicCtx& padic, std::int64_t n_terms) {
  if (ctx.split_type(padic.p()) != SplitType::kSplit)
    throw std::invalid_argument("eisenstein_family: p must split in K");
  if (n_terms < 0) throw std::invalid_argument("eisenstein_family: negative truncation");
  LambdaFamily f;
  f.padic = padic;
  f.tame_level = ctx.abs_disc();
  f.char_disc = ctx.disc();
  f.rules.reserve(static_cast<std::size_t>(n_terms) + 1);
  f.rules.push_back(IwasawaFn::constant(0));
  for (std::int64_t n = 1; n <= n_terms; ++n) f.rules.push_back(IwasawaFn::divisor_sum(n, f.char_disc, -1));
  return f;
}

QExpansion specialize(const LambdaFamily& family, const ArithPoint& point, std::int64_t n_terms) {
  check_compatible(family, n_terms);
  std::vector<Rat> c(static_cast<std::size_t>(n_terms) + 1);
  for (std::int64_t n = 0; n <= n_terms; ++n)
    c[static_cast<std::size_t>(n)] = Rat(family.rules[static_cast<std::size_t>(n)].eval(family.padic, point.k));
  const std::int64_t weight = point.k + family.weight_shift;
  return QExpansion(std::move(c), static_cast<int>(weight), family.tame_level * family.padic.p(),
                    family.char_disc, family.padic.modulus());
}

std::optional<std::int64_t> congruence_witness(const LambdaFamily& family, std::int64_t k,
                                               std::int64_t k_prime, int m, std::int64_t n_terms) {
  check_compatible(family, n_terms);
  const PadicCtx& ctx = family.padic;
  if (m < 0 || m + 1 > ctx.precision())
    throw std::invalid_argument("congruence_check: need 0 <= m and m + 1 <= M");
  const Int p(static_cast<long>(ctx.p()));
  const Int period = (p - 1) * ipow(p, static_cast<unsigned long>(m));
  if (mod(Int(static_cast<long>(k)) - Int(static_cast<long>(k_prime)), period) != 0)
    throw std::invalid_argument("congruence_check: weights are not congruent mod (p-1)p^m");
  const Int target = ipow(p, static_cast<unsigned long>(m + 1));
  for (std::int64_t n = 0; n <= n_terms; ++n) {
    const IwasawaFn& rule = family.rules[static_cast<std::size_t>(n)];
    if (mod(rule.eval(ctx, k) - rule.eval(ctx, k_prime), target) != 0) return n;
  }
  return std::nullopt;
}

bool congruence_check(const LambdaFamily& family, std::int64_t k, std::int64_t k_prime, int m,
                      std::int64_t n_terms) {
  return !congruence_witness(family, k, k_prime, m, n_terms).has_value();
}

LambdaFamily scale_family(const LambdaFamily& family, const IwasawaFn& lambda) {
  LambdaFamily out = family;
  for (IwasawaFn& r : out.rules) r = r * lambda;
  return out;
}

FiniteUpModel make_model(const PadicCtx& padic, IntMatrix matrix, std::vector<std::string> basis) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
    throw std::invalid_argument("FiniteUpModel: matrix must be square and non-empty");
  if (basis.empty())
    for (std::size_t i = 0; i < matrix.rows(); ++i) basis.push_back("b" + std::to_string(i));
  if (basis.size() != matrix.rows()) throw std::invalid_argument("FiniteUpModel: basis size mismatch");
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) matrix(i, j) = padic.reduce(matrix(i, j));
  return FiniteUpModel{padic, std::move(matrix), std::move(basis)};
}

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, const Int& m) {
  IntMatrix c = a * b;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = mod(c(i, j), m);
  return c;
}

IntMatrix mat_pow_mod(const IntMatrix& a, const Int& exp, const Int& m) {
  if (exp < 0) throw std::invalid_argument("mat_pow_mod: negative exponent");
  IntMatrix result = IntMatrix::identity(a.rows());
  for (std::size_t i = 0; i < result.rows(); ++i) result(i, i) = mod(result(i, i), m);
  IntMatrix base = a;
  Int e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mat_mul_mod(result, base, m);
    e >>= 1;
    if (e > 0) base = mat_mul_mod(base, base, m);
  }
  return result;
}

std::int64_t rank_mod_p(const IntMatrix& a, std::int64_t p) {
  const Int pp(static_cast<long>(p));
  IntMatrix w = a;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = mod(w(i, j), pp);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < w.rows() && w(piv, col) == 0) ++piv;
    if (piv == w.rows()) continue;
    for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(piv, j), w(rank, j));
    const Int inv = inverse_mod(w(rank, col), pp);
    for (std::size_t i = rank + 1; i < w.rows(); ++i) {
      if (w(i, col) == 0) continue;
      const Int f = mod(w(i, col) * inv, pp);
      for (std::size_t j = col; j < w.cols(); ++j) w(i, j) = mod(w(i, j) - f * w(rank, j), pp);
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

Int gl_order(std::int64_t d, std::int64_t p) {
  const Int pp(static_cast<long>(p));
  const Int q = ipow(pp, static_cast<unsigned long>(d));
  Int order = 1;
  for (std::int64_t i = 0; i < d; ++i) order *= q - ipow(pp, static_cast<unsigned long>(i));
  return order;
}

ProjectorResult ordinary_projector(const FiniteUpModel& model, int iteration_cap) {
  const Int& m = model.padic.modulus();
  const std::size_t d = model.matrix.rows();
  // After the |GL_d(F_p)|-th power the unit part is 1 mod p and the
  // topologically nilpotent part is 0 mod p; p-th powers then converge.
  IntMatrix b = mat_pow_mod(model.matrix, gl_order(static_cast<std::int64_t>(d), model.padic.p()), m);
  const Int p(static_cast<long>(model.padic.p()));
  ProjectorResult r;
  while (true) {
    if (mat_mul_mod(b, b, m) == b) break;
    if (r.iterations >= iteration_cap) throw std::runtime_error("ordinary_projector: no stabilization");
    b = mat_pow_mod(b, p, m);
    ++r.iterations;
  }
  r.rank = rank_mod_p(b, model.padic.p());
  r.e = std::move(b);
  return r;
}

}  // namespace picard
