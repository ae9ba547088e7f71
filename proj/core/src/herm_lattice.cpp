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

#include "picard/herm_lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace picard {

namespace {

Int lcm_of_denominators(const std::vector<Rat>& values) {
  Int l = 1;
  for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

// O_K-discriminant of a rank-one lattice from the determinant of its
// binary norm form: d^2 = 4*det(q)/|disc|.
Rat rank_one_discriminant(const Rat& qa, const Rat& qb, const Rat& qc, std::int64_t abs_disc) {
  Rat det = qa * qc - qb * qb / 4;
  Rat sq = 4 * det / Rat(static_cast<long>(abs_disc));
  Rat root;
  if (!exact_sqrt(sq, &root)) {
    throw std::logic_error("rank-one discriminant is not rational: d^2 = " + to_string(sq));
  }
  return root;
}

std::int64_t checked_int64(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("representation_counts: coefficient too large");
  return z.get_si();
}

}  // namespace

KVec unit_vector(int i) {
  KVec v{KElem{0, 0}, KElem{0, 0}, KElem{0, 0}};
  v.at(static_cast<std::size_t>(i)).x = 1;
  return v;
}

KVec scale(const FieldCtx& ctx, const KElem& a, const KVec& v) {
  return KVec{ctx.mul(a, v[0]), ctx.mul(a, v[1]), ctx.mul(a, v[2])};
}

KVec add(const FieldCtx& ctx, const KVec& u, const KVec& v) {
  return KVec{ctx.add(u[0], v[0]), ctx.add(u[1], v[1]), ctx.add(u[2], v[2])};
}

std::vector<Rat> rational_coordinates(const KVec& v) {
  return {v[0].x, v[0].y, v[1].x, v[1].y, v[2].x, v[2].y};
}

KVec from_rational_coordinates(const std::vector<Rat>& c) {
  if (c.size() != 6) throw std::invalid_argument("K^3 vector needs 6 rational coordinates");
  return KVec{KElem{c[0], c[1]}, KElem{c[2], c[3]}, KElem{c[4], c[5]}};
}

KElem hermitian(const FieldCtx& ctx, const KVec& u, const KVec& v) {
  const KElem delta_inv = ctx.inv(ctx.delta());
  KElem t1 = ctx.mul(ctx.mul(ctx.conj(u[0]), delta_inv), v[2]);
  KElem t2 = ctx.mul(ctx.conj(u[1]), v[1]);
  KElem t3 = ctx.mul(ctx.mul(ctx.conj(u[2]), delta_inv), v[0]);
  return ctx.sub(ctx.add(t1, t2), t3);
}

Rat trace_form(const FieldCtx& ctx, const KVec& u, const KVec& v) {
  return ctx.trace(hermitian(ctx, u, v));
}

HermLattice HermLattice::from_basis(const FieldCtx& ctx, std::vector<KVec> zbasis) {
  if (zbasis.size() != 6) throw std::invalid_argument("a lattice in K^3 needs 6 Z-basis vectors");
  HermLattice l;
  l.ctx_ = ctx;
  l.coords_ = RatMatrix(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Rat> c = rational_coordinates(zbasis[i]);
    for (std::size_t j = 0; j < 6; ++j) l.coords_(i, j) = c[j];
  }
  if (determinant(l.coords_) == 0) throw std::invalid_argument("lattice basis is not of full rank");
  l.coords_inv_ = inverse(l.coords_);
  l.gram_ = RatMatrix(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) {
      Rat t = trace_form(ctx, zbasis[i], zbasis[j]);
      l.gram_(i, j) = t;
      l.gram_(j, i) = t;
    }
  l.zbasis_ = std::move(zbasis);
  return l;
}

std::vector<Rat> HermLattice::coordinates(const KVec& v) const {
  std::vector<Rat> c = rational_coordinates(v);
  std::vector<Rat> out(6);
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t k = 0; k < 6; ++k) out[j] += c[k] * coords_inv_(k, j);
  return out;
}

bool HermLattice::contains(const KVec& v) const {
  for (const Rat& c : coordinates(v))
    if (c.get_den() != 1) return false;
  return true;
}

bool HermLattice::in_dual(const KVec& v) const {
  for (const KVec& b : zbasis_)
    if (trace_form(ctx_, b, v).get_den() != 1) return false;
  return true;
}

bool HermLattice::is_ok_stable() const {
  const KElem w = ctx_.omega();
  for (const KVec& b : zbasis_)
    if (!contains(scale(ctx_, w, b))) return false;
  return true;
}

bool HermLattice::is_integral() const { return picard::is_integral(gram_); }

HermLattice standard_lattice(const FieldCtx& ctx) {
  std::vector<KVec> basis;
  for (int i = 0; i < 3; ++i) {
    basis.push_back(unit_vector(i));
    basis.push_back(scale(ctx, ctx.omega(), unit_vector(i)));
  }
  return HermLattice::from_basis(ctx, std::move(basis));
}

HermLattice dual_lattice(const HermLattice& lattice) {
  RatMatrix ginv = inverse(lattice.gram());
  const FieldCtx& ctx = lattice.field();
  std::vector<KVec> basis;
  for (std::size_t j = 0; j < 6; ++j) {
    KVec v{KElem{0, 0}, KElem{0, 0}, KElem{0, 0}};
    for (std::size_t k = 0; k < 6; ++k) {
      if (ginv(k, j) == 0) continue;
      v = add(ctx, v, scale(ctx, KElem{ginv(k, j), 0}, lattice.zbasis()[k]));
    }
    basis.push_back(v);
  }
  return HermLattice::from_basis(ctx, std::move(basis));
}

bool same_span(const HermLattice& a, const HermLattice& b) {
  std::vector<Rat> all;
  for (const HermLattice* l : {&a, &b})
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) all.push_back(l->coordinate_matrix()(i, j));
  Int den = lcm_of_denominators(all);
  auto scaled = [&den](const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat v = m(i, j) * den;
        out(i, j) = v.get_num();
      }
    return out;
  };
  return hermite_normal_form(scaled(a.coordinate_matrix())) ==
         hermite_normal_form(scaled(b.coordinate_matrix()));
}

Rat dual_index(const HermLattice& lattice) { return abs(determinant(lattice.gram())); }

CosetLattice CosetLattice::make(HermLattice base, const KVec& shift) {
  if (!base.in_dual(shift)) throw std::invalid_argument("coset shift does not lie in the dual lattice");
  return CosetLattice(std::move(base), shift);
}

bool CosetLattice::contains(const KVec& v) const {
  if (!base_.in_dual(v)) return false;
  KVec diff = add(base_.field(), v, scale(base_.field(), KElem{-1, 0}, shift_));
  return base_.contains(diff);
}

Rat RankOneForm::value(const Rat& a, const Rat& b) const {
  Rat x = a + shift_a;
  Rat y = b + shift_b;
  return qa * x * x + qb * x * y + qc * y * y;
}

RankOneForm rank_one(const HermLattice& lattice, const KVec& w, const std::optional<KVec>& shift) {
  const FieldCtx& ctx = lattice.field();
  KElem ww = hermitian(ctx, w, w);
  if (ww.x <= 0) throw std::invalid_argument("rank_one: w must satisfy (w, w) > 0");

  // Integral coordinates of den1*w and den2*delta*w in the lattice basis.
  std::vector<KVec> gens{w, scale(ctx, ctx.delta(), w)};
  std::vector<Int> dens;
  IntMatrix b(6, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<Rat> c = lattice.coordinates(gens[j]);
    Int den = lcm_of_denominators(c);
    dens.push_back(den);
    for (std::size_t i = 0; i < 6; ++i) {
      Rat v = c[i] * den;
      b(i, j) = v.get_num();
    }
  }
  IntMatrix h = hermite_normal_form(b);
  if (h.rows() != 2) throw std::logic_error("rank_one: line has degenerate coordinates");
  RatMatrix hinv = inverse(to_rational(h));

  std::array<KVec, 2> f;
  for (std::size_t j = 0; j < 2; ++j) {
    KVec v{KElem{0, 0}, KElem{0, 0}, KElem{0, 0}};
    for (std::size_t i = 0; i < 2; ++i) {
      Rat s = hinv(i, j) * dens[i];
      v = add(ctx, v, scale(ctx, KElem{s, 0}, gens[i]));
    }
    f[j] = v;
  }

  // Gauss reduction to 0 <= qb <= qa <= qc, so equal lines give equal forms.
  auto form_of = [&](const KVec& u, const KVec& v) {
    return std::array<Rat, 3>{hermitian(ctx, u, u).x, trace_form(ctx, u, v), hermitian(ctx, v, v).x};
  };
  auto q = form_of(f[0], f[1]);
  while (true) {
    if (q[2] < q[0]) {
      KVec t0 = f[0];
      f[0] = f[1];
      f[1] = scale(ctx, KElem{-1, 0}, t0);
    } else if (abs(q[1]) > q[0]) {
      Rat rounded = q[1] / (2 * q[0]) + Rat(1, 2);
      Int m;
      mpz_fdiv_q(m.get_mpz_t(), rounded.get_num_mpz_t(),
                 rounded.get_den_mpz_t());
      f[1] = add(ctx, f[1], scale(ctx, KElem{Rat(-m), 0}, f[0]));
    } else {
      break;
    }
    q = form_of(f[0], f[1]);
  }
  if (q[1] < 0) {
    f[1] = scale(ctx, KElem{-1, 0}, f[1]);
    q = form_of(f[0], f[1]);
  }

  RankOneForm out;
  out.field_disc = ctx.disc();
  out.gen1 = f[0];
  out.gen2 = f[1];
  out.qa = q[0];
  out.qb = q[1];
  out.qc = q[2];
  out.shift_a = 0;
  out.shift_b = 0;

  if (shift) {
    std::vector<Rat> hv = rational_coordinates(*shift);
    std::vector<Rat> c1 = rational_coordinates(f[0]);
    std::vector<Rat> c2 = rational_coordinates(f[1]);
    bool solved = false;
    for (std::size_t i = 0; i < 6 && !solved; ++i)
      for (std::size_t j = i + 1; j < 6 && !solved; ++j) {
        Rat det = c1[i] * c2[j] - c1[j] * c2[i];
        if (det == 0) continue;
        out.shift_a = (hv[i] * c2[j] - hv[j] * c2[i]) / det;
        out.shift_b = (c1[i] * hv[j] - c1[j] * hv[i]) / det;
        solved = true;
      }
    for (std::size_t i = 0; i < 6; ++i)
      if (out.shift_a * c1[i] + out.shift_b * c2[i] != hv[i])
        throw std::invalid_argument("rank_one: shift is not on the line K*w");
    // Only the class mod Z^2 matters; keep the representative in [0, 1).
    auto frac = [](const Rat& q) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return Rat(q - fl);
    };
    out.shift_a = frac(out.shift_a);
    out.shift_b = frac(out.shift_b);
  }

  out.disc_lattice = rank_one_discriminant(out.qa, out.qb, out.qc, ctx.abs_disc());

  // Dual inside K*w for the trace form: Gram T = [[2qa, qb], [qb, 2qc]].
  RatMatrix t(2, 2);
  t(0, 0) = 2 * out.qa;
  t(0, 1) = out.qb;
  t(1, 0) = out.qb;
  t(1, 1) = 2 * out.qc;
  RatMatrix tinv = inverse(t);
  std::array<KVec, 2> g;
  for (std::size_t j = 0; j < 2; ++j) {
    g[j] = add(ctx, scale(ctx, KElem{tinv(0, j), 0}, f[0]), scale(ctx, KElem{tinv(1, j), 0}, f[1]));
  }
  out.disc_dual = rank_one_discriminant(hermitian(ctx, g[0], g[0]).x, trace_form(ctx, g[0], g[1]),
                                        hermitian(ctx, g[1], g[1]).x, ctx.abs_disc());
  return out;
}

RankOneForm rank_one(const CosetLattice& coset, const KVec& w) {
  return rank_one(coset.base(), w, coset.shift());
}

Int count_norm(const RankOneForm& form, const Int& n) {
  if (n < 0) return 0;
  const Rat delta = 4 * form.qa * form.qc - form.qb * form.qb;
  if (form.qa <= 0 || delta <= 0) throw std::invalid_argument("count_norm: form is not positive definite");
  const Rat nr(n);
  // Delta*y^2 <= 4*qa*n bounds y = b + shift_b.
  double ybound = std::sqrt(Rat(4 * form.qa * nr / delta).get_d()) + 1.0;
  long b_lo = static_cast<long>(std::floor(-ybound - form.shift_b.get_d())) - 1;
  long b_hi = static_cast<long>(std::ceil(ybound - form.shift_b.get_d())) + 1;
  Int count = 0;
  for (long b = b_lo; b <= b_hi; ++b) {
    Rat y = Rat(b) + form.shift_b;
    Rat disc_x = 4 * form.qa * nr - delta * y * y;
    if (disc_x < 0) continue;
    Rat root;
    if (!exact_sqrt(disc_x, &root)) continue;
    for (int sign : {1, -1}) {
      if (sign == -1 && root == 0) break;
      Rat x = (-form.qb * y + sign * root) / (2 * form.qa);
      Rat a = x - form.shift_a;
      if (a.get_den() == 1) ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> representation_counts(const RankOneForm& form, std::int64_t max_n) {
  if (max_n < 0) throw std::invalid_argument("representation_counts: max_n must be >= 0");
  const Rat delta = 4 * form.qa * form.qc - form.qb * form.qb;
  if (form.qa <= 0 || delta <= 0) throw std::invalid_argument("form is not positive definite");
  const Rat& s = form.shift_a;
  const Rat& t = form.shift_b;
  // l*q(a + s, b + t) = A a^2 + B ab + C b^2 + E a + F b + G with integers.
  std::vector<Rat> coef{form.qa,
                        form.qb,
                        form.qc,
                        2 * form.qa * s + form.qb * t,
                        form.qb * s + 2 * form.qc * t,
                        form.value(0, 0)};
  Int l = lcm_of_denominators(coef);
  std::array<std::int64_t, 6> c{};
  for (std::size_t i = 0; i < 6; ++i) {
    Rat v = coef[i] * l;
    c[i] = checked_int64(v.get_num());
  }
  const std::int64_t lden = checked_int64(l);
  const __int128 limit = static_cast<__int128>(lden) * max_n;

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_n) + 1, 0);
  const double qa = form.qa.get_d();
  const double qb = form.qb.get_d();
  const double dd = delta.get_d();
  const double nmax = static_cast<double>(max_n);
  const double ybound = std::sqrt(4 * qa * nmax / dd) + 1.0;
  const long b_lo = static_cast<long>(std::floor(-ybound - t.get_d())) - 1;
  const long b_hi = static_cast<long>(std::ceil(ybound - t.get_d())) + 1;
  for (long b = b_lo; b <= b_hi; ++b) {
    double y = static_cast<double>(b) + t.get_d();
    double rad2 = 4 * qa * nmax - dd * y * y;
    if (rad2 < -1.0) continue;
    double center = -qb * y / (2 * qa);
    double rad = std::sqrt(std::max(rad2, 0.0)) / (2 * qa) + 1.0;
    long a_lo = static_cast<long>(std::floor(center - rad - s.get_d())) - 1;
    long a_hi = static_cast<long>(std::ceil(center + rad - s.get_d())) + 1;
    const __int128 bb = b;
    for (long a = a_lo; a <= a_hi; ++a) {
      const __int128 aa = a;
      __int128 v = c[0] * aa * aa + c[1] * aa * bb + c[2] * bb * bb + c[3] * aa + c[4] * bb + c[5];
      if (v < 0 || v > limit || v % lden != 0) continue;
      ++counts[static_cast<std::size_t>(v / lden)];
    }
  }
  return counts;
}

}  // namespace picard
