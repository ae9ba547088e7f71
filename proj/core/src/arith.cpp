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

#include "picard/arith.hpp"

#include <stdexcept>

namespace picard {

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("inverse_mod: " + a.get_str() + " is not a unit mod " + m.get_str());
  }
  return mod(r, m);
}

Int pow_mod(const Int& base, const Int& exp, const Int& m) {
  if (m == 1) return Int(0);
  Int b = base;
  Int e = exp;
  if (sgn(e) < 0) {
    b = inverse_mod(base, m);
    e = -e;
  }
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int pow_mod(const Int& base, std::int64_t exp, const Int& m) {
  return pow_mod(base, Int(static_cast<long>(exp)), m);
}

Int rat_mod(const Rat& q, const Int& m) {
  return mod(q.get_num() * inverse_mod(q.get_den(), m), m);
}

Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rpow(const Rat& base, long exp) {
  if (exp >= 0) {
    Rat r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
          ipow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw std::domain_error("rpow: zero to a negative power");
  Rat inv = 1 / base;
  return rpow(inv, -exp);
}

int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& [q, e] : factor(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("factor: zero");
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(const Int& n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int v = abs(n);
  int e = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
    v /= static_cast<unsigned long>(p);
    ++e;
  }
  return e;
}

bool exact_sqrt(const Rat& q, Rat* root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  Int n = sqrt(q.get_num());
  Int d = sqrt(q.get_den());
  *root = Rat(n, d);
  root->canonicalize();
  return true;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Int parse_integer(std::string_view text) {
  Int z;
  if (text.empty() || z.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return z;
}

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace picard
