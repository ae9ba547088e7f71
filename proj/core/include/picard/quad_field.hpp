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

// Arithmetic in K = Q(sqrt(-D)) and its ring of integers O_K = Z[w].
//
// Integral elements are written a + b*w with w = (1 + sqrt(-D))/2 when
// D = 3 mod 4 and w = sqrt(-D) otherwise. General field elements use the
// coordinates x + y*delta with delta = sqrt(-D), so delta^2 = -D and
// conj(delta) = -delta.

#ifndef PICARD_QUAD_FIELD_HPP_
#define PICARD_QUAD_FIELD_HPP_

#include <cstdint>
#include <string>

#include "picard/arith.hpp"

namespace picard {

enum class SplitType { kSplit, kInert, kRamified };

std::string to_string(SplitType t);

// a + b*w in O_K.
struct QuadInt {
  Int a;
  Int b;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

// x + y*delta in K.
struct KElem {
  Rat x;
  Rat y;

  friend bool operator==(const KElem&, const KElem&) = default;
};

class FieldCtx {
 public:
  // Throws std::invalid_argument unless d is a positive squarefree integer.
  static FieldCtx make(std::int64_t d);

  std::int64_t D() const { return d_; }
  std::int64_t disc() const { return disc_; }
  std::int64_t abs_disc() const { return disc_ < 0 ? -disc_ : disc_; }
  // True when w = (1 + delta)/2.
  bool half_integral_basis() const { return half_; }
  const Int& omega_trace() const { return omega_trace_; }
  const Int& omega_norm() const { return omega_norm_; }

  QuadInt add(const QuadInt& x, const QuadInt& y) const;
  QuadInt sub(const QuadInt& x, const QuadInt& y) const;
  QuadInt mul(const QuadInt& x, const QuadInt& y) const;
  QuadInt conj(const QuadInt& x) const;
  Int norm(const QuadInt& x) const;
  Int trace(const QuadInt& x) const;

  KElem embed(const QuadInt& x) const;
  KElem omega() const { return embed(QuadInt{0, 1}); }
  KElem delta() const { return KElem{0, 1}; }
  // Returns true and fills *out when z lies in O_K.
  bool to_integral(const KElem& z, QuadInt* out) const;

  KElem add(const KElem& x, const KElem& y) const;
  KElem sub(const KElem& x, const KElem& y) const;
  KElem mul(const KElem& x, const KElem& y) const;
  KElem inv(const KElem& x) const;
  KElem conj(const KElem& x) const { return KElem{x.x, -x.y}; }
  Rat norm(const KElem& x) const;
  Rat trace(const KElem& x) const { return 2 * x.x; }

  // Kronecker symbol (disc / n): the quadratic character of K/Q.
  int chi(const Int& n) const;
  int chi(std::int64_t n) const { return chi(Int(static_cast<long>(n))); }

  // p must be prime.
  SplitType split_type(std::int64_t p) const;

 private:
  std::int64_t d_ = 0;
  std::int64_t disc_ = 0;
  bool half_ = false;
  Int omega_trace_;
  Int omega_norm_;
};

}  // namespace picard

#endif  // PICARD_QUAD_FIELD_HPP_
