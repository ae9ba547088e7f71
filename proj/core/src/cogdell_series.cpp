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


#include "picard/cogdell_series.hpp"

#include <stdexcept>

namespace picard {

void validate(const SeriesParams& params) {
  if (params.n0_norm <= 0) throw std::invalid_argument("n0_norm must be positive");
  if (params.h_sigma <= 0) throw std::invalid_argument("h_sigma must be positive");
  if (params.n_terms < 1) throw std::invalid_argument("truncation must be >= 1");
  if (params.weight_k < 0) throw std::invalid_argument("weight_k must be >= 0");
  if (params.form.field_disc != params.ctx.disc()) {
    throw std::invalid_argument("rank-one form belongs to a different field");
  }
}

SeriesParams standard_params(const FieldCtx& ctx, std::int64_t n_terms) {
  SeriesParams p;
  p.ctx = ctx;
  p.form = rank_one(standard_lattice(ctx), unit_vector(1));
  p.n_terms = n_terms;
  return p;
}

Rat cusp_coefficient(const SeriesParams& params, std::int64_t n) {
  validate(params);
  if (n < 1) throw std::invalid_argument("cusp_coefficient: n must be >= 1");
  Rat count(count_norm(params.form, Int(static_cast<long>(n))));
  return Rat(n * params.ctx.abs_disc()) * params.n0_norm / params.h_sigma * count;
}

namespace {

QExpansion scaled_counts(const SeriesParams& params) {
  validate(params);
  const int k = params.weight_k;
  const std::int64_t n_terms = params.n_terms;
  const Rat scalar = Rat(params.ctx.abs_disc()) * params.n0_norm / params.h_sigma *
                     rpow(params.form.disc_lattice * params.form.disc_dual, -k);
  std::vector<std::uint64_t> counts = representation_counts(params.form, n_terms);
  QExpansion f = QExpansion::zero(n_terms, 2 * k + 3, params.ctx.abs_disc(), params.ctx.disc());
  if (k == 0) f.set(0, params.constant_term);
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const std::uint64_t r = counts[static_cast<std::size_t>(n)];
    if (r == 0) continue;
    Rat v = scalar * Rat(ipow(Int(static_cast<long>(n)), static_cast<unsigned long>(k + 1))) *
            Rat(Int(static_cast<unsigned long>(r)));
    f.set(n, v);
  }
  return f;
}

}  // namespace

QExpansion cusp_series(const SeriesParams& params) {
  if (params.weight_k != 0) throw std::invalid_argument("cusp_series requires weight_k = 0");
  return scaled_counts(params);
}

QExpansion higher_weight_series(const SeriesParams& params) { return scaled_counts(params); }

QExpansion theta_series(const FieldCtx& ctx, const RankOneForm& form, std::int64_t n_terms) {
  if (form.field_disc != ctx.disc()) throw std::invalid_argument("form belongs to a different field");
  std::vector<std::uint64_t> counts = representation_counts(form, n_terms);
  QExpansion f = QExpansion::zero(n_terms, 1, ctx.abs_disc(), ctx.disc());
  for (std::int64_t n = 0; n <= n_terms; ++n)
    f.set(n, Rat(Int(static_cast<unsigned long>(counts[static_cast<std::size_t>(n)]))));
  return f;
}

}  // namespace picard
