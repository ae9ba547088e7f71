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


// Generating series of cusp intersection numbers built from rank-one
// representation counts r(n) = #{v in L(n) meet L_sigma}:
//
//   a_n = n * |disc K| * N(N_0) / |H_sigma| * r(n),
//
// and the weight 2k+3 variant a_n * n^k * (d(L_sigma) d(L_sigma^dual))^(-k).

#ifndef PICARD_COGDELL_SERIES_HPP_
#define PICARD_COGDELL_SERIES_HPP_

#include <cstdint>

#include "picard/herm_lattice.hpp"
#include "picard/qexp.hpp"

namespace picard {

struct SeriesParams {
  FieldCtx ctx;
  RankOneForm form;
  Rat n0_norm = 1;
  // Only n0_norm / h_sigma enters the coefficients.
  Rat h_sigma = 1;
  int weight_k = 0;
  Rat constant_term = 0;
  std::int64_t n_terms = 1;
};

// Throws std::invalid_argument on n0_norm <= 0, h_sigma <= 0, n_terms < 1,
// weight_k < 0 or a form from another field.
void validate(const SeriesParams& params);

// The defaults used throughout: O_K^3, line e_2, unit scalars.
SeriesParams standard_params(const FieldCtx& ctx, std::int64_t n_terms);

Rat cusp_coefficient(const SeriesParams& params, std::int64_t n);

// a_0 = constant_term; weight 3, level |disc|, character of K. Requires weight_k = 0.
QExpansion cusp_series(const SeriesParams& params);

// Weight 2k + 3; a_0 = constant_term only when k = 0.
QExpansion higher_weight_series(const SeriesParams& params);

// sum_n r(n) q^n: weight 1, level |disc|, character of K.
QExpansion theta_series(const FieldCtx& ctx, const RankOneForm& form, std::int64_t n_terms);

}  // namespace picard

#endif  // PICARD_COGDELL_SERIES_HPP_
