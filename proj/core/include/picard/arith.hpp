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

#ifndef PICARD_ARITH_HPP_
#define PICARD_ARITH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace picard {

using Int = mpz_class;
using Rat = mpq_class;

// Non-negative representative of a mod m (m > 0).
Int mod(const Int& a, const Int& m);

// base^exp mod m; a negative exponent inverts base first (base must be a unit).
Int pow_mod(const Int& base, const Int& exp, const Int& m);
Int pow_mod(const Int& base, std::int64_t exp, const Int& m);

// Throws std::domain_error if a is not a unit mod m.
Int inverse_mod(const Int& a, const Int& m);

// Image of a rational in Z/m; the denominator must be a unit mod m.
Int rat_mod(const Rat& q, const Int& m);

// Canonical num/den (den != 0).
Rat ratio(const Int& num, const Int& den);

Int ipow(const Int& base, unsigned long exp);
Rat rpow(const Rat& base, long exp);

// Kronecker symbol (a/n) for arbitrary integers.
int kronecker(const Int& a, const Int& n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

// Trial-division factorization of |n|, n != 0.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

// p-adic valuation of a non-zero integer.
int valuation(const Int& n, std::int64_t p);

// Exact square root of a non-negative rational, if it is a square.
bool exact_sqrt(const Rat& q, Rat* root);

// "p/q" (or "p" when q == 1), and its inverse. Parsing canonicalizes.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);
Rat parse_rational(std::string_view text);
Int parse_integer(std::string_view text);

}  // namespace picard

#endif  // PICARD_ARITH_HPP_
