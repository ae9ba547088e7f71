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

#include "picard/quad_field.hpp"

#include <stdexcept>

namespace picard {

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::kSplit:
      return "split";
    case SplitType::kInert:
      return "inert";
    case SplitType::kRamified:
      return "ramified";
  }
  return "unknown";
}

FieldCtx FieldCtx::make(std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("D must be positive, got " + std::to_string(d));
  if (!is_squarefree(d)) {
    throw std::invalid_argument("D must be squarefree, got " + std::to_string(d));
  }
  FieldCtx ctx;
  ctx.d_ = d;
  ctx.half_ = (d % 4 == 3);
  ctx.disc_ = ctx.half_ ? -d : -4 * d;
  if (ctx.half_) {
    ctx.omega_trace_ = 1;
    ctx.omega_norm_ = Int(static_cast<long>((1 + d) / 4));
  } else {
    ctx.omega_trace_ = 0;
    ctx.omega_norm_ = Int(static_cast<long>(d));
  }
  return ctx;
}

QuadInt FieldCtx::add(const QuadInt& x, const QuadInt& y) const {
  return QuadInt{x.a + y.a, x.b + y.b};
}

QuadInt FieldCtx::sub(const QuadInt& x, const QuadInt& y) const {
  return QuadInt{x.a - y.a, x.b - y.b};
}

// w^2 = tr(w) w - N(w).
QuadInt FieldCtx::mul(const QuadInt& x, const QuadInt& y) const {
  Int bd = x.b * y.b;
  return QuadInt{x.a * y.a - bd * omega_norm_, x.a * y.b + x.b * y.a + bd * omega_trace_};
}

QuadInt FieldCtx::conj(const QuadInt& x) const {
  return QuadInt{x.a + x.b * omega_trace_, -x.b};
}

Int FieldCtx::norm(const QuadInt& x) const {
  return x.a * x.a + x.a * x.b * omega_trace_ + x.b * x.b * omega_norm_;
}

Int FieldCtx::trace(const QuadInt& x) const { return 2 * x.a + x.b * omega_trace_; }

KElem FieldCtx::embed(const QuadInt& x) const {
  if (half_) {
    Rat half_b(x.b, 2);
    half_b.canonicalize();
    return KElem{Rat(x.a) + half_b, half_b};
  }
  return KElem{Rat(x.a), Rat(x.b)};
}

bool FieldCtx::to_integral(const KElem& z, QuadInt* out) const {
  // Invert embed(): b = 2y (half basis) or y, a = x - b/2 (half basis) or x.
  Rat b = half_ ? Rat(2 * z.y) : z.y;
  Rat a = half_ ? Rat(z.x - z.y) : z.x;
  if (b.get_den() != 1 || a.get_den() != 1) return false;
  *out = QuadInt{a.get_num(), b.get_num()};
  return true;
}

KElem FieldCtx::add(const KElem& x, const KElem& y) const { return KElem{x.x + y.x, x.y + y.y}; }

KElem FieldCtx::sub(const KElem& x, const KElem& y) const { return KElem{x.x - y.x, x.y - y.y}; }

KElem FieldCtx::mul(const KElem& x, const KElem& y) const {
  return KElem{x.x * y.x - d_ * (x.y * y.y), x.x * y.y + x.y * y.x};
}

Rat FieldCtx::norm(const KElem& x) const { return x.x * x.x + d_ * (x.y * x.y); }

KElem FieldCtx::inv(const KElem& x) const {
  Rat n = norm(x);
  if (n == 0) throw std::domain_error("inverse of zero in K");
  return KElem{x.x / n, -x.y / n};
}

int FieldCtx::chi(const Int& n) const { return kronecker(Int(static_cast<long>(disc_)), n); }

SplitType FieldCtx::split_type(std::int64_t p) const {
  if (!is_prime(p)) throw std::invalid_argument("split_type: " + std::to_string(p) + " is not prime");
  if (disc_ % p == 0) return SplitType::kRamified;
  return chi(p) == 1 ? SplitType::kSplit : SplitType::kInert;
}

}  // namespace picard
