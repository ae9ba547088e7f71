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

// Hermitian O_K-lattices in V = K^3 with (u, v) = conj(u)^t J v, where
//
//       (            delta^-1 )
//   J = (       1             )
//       ( -delta^-1           )
//
// Lattices are stored by Z-bases of rank 6; a vector of K^3 has the six
// rational coordinates (x1, y1, x2, y2, x3, y3) with v_i = x_i + y_i*delta.

#ifndef PICARD_HERM_LATTICE_HPP_
#define PICARD_HERM_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "picard/linalg.hpp"
#include "picard/quad_field.hpp"

namespace picard {

using KVec = std::array<KElem, 3>;

KVec unit_vector(int i);  // e_1, e_2, e_3 for i = 0, 1, 2
KVec scale(const FieldCtx& ctx, const KElem& a, const KVec& v);
KVec add(const FieldCtx& ctx, const KVec& u, const KVec& v);
std::vector<Rat> rational_coordinates(const KVec& v);
KVec from_rational_coordinates(const std::vector<Rat>& c);

// conj(u)^t J v.
KElem hermitian(const FieldCtx& ctx, const KVec& u, const KVec& v);
// tr((u, v)) = 2 Re (u, v).
Rat trace_form(const FieldCtx& ctx, const KVec& u, const KVec& v);

class HermLattice {
 public:
  // Throws std::invalid_argument unless `zbasis` has 6 Q-independent vectors.
  static HermLattice from_basis(const FieldCtx& ctx, std::vector<KVec> zbasis);

  const FieldCtx& field() const { return ctx_; }
  const std::vector<KVec>& zbasis() const { return zbasis_; }
  // Gram matrix of the trace form on zbasis.
  const RatMatrix& gram() const { return gram_; }
  // Rows are the rational coordinates of zbasis.
  const RatMatrix& coordinate_matrix() const { return coords_; }

  std::vector<Rat> coordinates(const KVec& v) const;
  bool contains(const KVec& v) const;
  bool in_dual(const KVec& v) const;
  bool is_ok_stable() const;
  // Trace form integral on the lattice, i.e. L is contained in its dual.
  bool is_integral() const;

 private:
  FieldCtx ctx_;
  std::vector<KVec> zbasis_;
  RatMatrix gram_;
  RatMatrix coords_;
  RatMatrix coords_inv_;
};

// O_K^3 with the Z-basis e_i, w*e_i.
HermLattice standard_lattice(const FieldCtx& ctx);

// Z-dual basis via the inverse trace Gram matrix. Throws std::domain_error
// for a degenerate Gram matrix.
HermLattice dual_lattice(const HermLattice& lattice);

// Same Z-span, decided by Hermite normal form equality.
bool same_span(const HermLattice& a, const HermLattice& b);

// |det gram| = [L^dual : L] when L is integral.
Rat dual_index(const HermLattice& lattice);

// L' = { v in L^dual : v = shift mod L }.
class CosetLattice {
 public:
  // Throws std::invalid_argument unless shift lies in the dual of base.
  static CosetLattice make(HermLattice base, const KVec& shift);

  const HermLattice& base() const { return base_; }
  const KVec& shift() const { return shift_; }
  bool contains(const KVec& v) const;

 private:
  CosetLattice(HermLattice base, KVec shift) : base_(std::move(base)), shift_(std::move(shift)) {}
  HermLattice base_;
  KVec shift_;
};

// The hermitian norm restricted to (L meet K*w), written in a Z-basis
// (gen1, gen2) as q(a, b) = qa*a^2 + qb*a*b + qc*b^2, optionally shifted:
// the coset points are (a + shift_a)*gen1 + (b + shift_b)*gen2.
struct RankOneForm {
  std::int64_t field_disc = 0;
  Rat qa;
  Rat qb;
  Rat qc;
  Rat shift_a;
  Rat shift_b;
  KVec gen1;
  KVec gen2;
  // O_K-discriminants d(L_w) and d(L_w^dual); see rank_one().
  Rat disc_lattice;
  Rat disc_dual;

  bool shifted() const { return shift_a != 0 || shift_b != 0; }
  Rat value(const Rat& a, const Rat& b) const;
};

// Rank-one sublattice L meet K*w. The O_K-discriminant is the rational
// d = sqrt(4*det(q)/|disc K|), which equals (f, f)*N(a) for L_w = a*f; the
// dual is taken inside the line K*w for the trace form.
//
// Throws std::invalid_argument for w with (w, w) <= 0, or a shift that is
// not on the line K*w.
RankOneForm rank_one(const HermLattice& lattice, const KVec& w,
                     const std::optional<KVec>& shift = std::nullopt);
RankOneForm rank_one(const CosetLattice& coset, const KVec& w);

// #{(a, b) in Z^2 : q(a + shift_a, b + shift_b) = n}.
Int count_norm(const RankOneForm& form, const Int& n);

// Counts for every n = 0..max_n by one enumeration of the ellipse q <= max_n.
std::vector<std::uint64_t> representation_counts(const RankOneForm& form, std::int64_t max_n);

}  // namespace picard

#endif  // PICARD_HERM_LATTICE_HPP_
