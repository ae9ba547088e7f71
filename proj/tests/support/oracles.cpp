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


#include "oracles.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<std::int64_t> box_counts(std::int64_t qa, std::int64_t qb, std::int64_t qc,
                                     std::int64_t max_n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_n) + 1, 0);
  const double det = 4.0 * qa * qc - static_cast<double>(qb) * qb;
  const auto ra = static_cast<std::int64_t>(std::sqrt(4.0 * qc * max_n / det)) + 2;
  const auto rb = static_cast<std::int64_t>(std::sqrt(4.0 * qa * max_n / det)) + 2;
  for (std::int64_t a = -ra; a <= ra; ++a)
    for (std::int64_t b = -rb; b <= rb; ++b) {
      std::int64_t v = qa * a * a + qb * a * b + qc * b * b;
      if (v <= max_n) ++out[static_cast<std::size_t>(v)];
    }
  return out;
}

std::vector<std::int64_t> shifted_box_counts(const Rat& qa, const Rat& qb, const Rat& qc,
                                             const Rat& sa, const Rat& sb, std::int64_t radius,
                                             std::int64_t max_n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_n) + 1, 0);
  for (std::int64_t a = -radius; a <= radius; ++a)
    for (std::int64_t b = -radius; b <= radius; ++b) {
      Rat x = Rat(static_cast<long>(a)) + sa;
      Rat y = Rat(static_cast<long>(b)) + sb;
      Rat v = qa * x * x + qb * x * y + qc * y * y;
      if (v.get_den() != 1 || v > max_n) continue;
      ++out[v.get_num().get_ui()];
    }
  return out;
}

int square_root_count(std::int64_t a, std::int64_t m) {
  int c = 0;
  std::int64_t r = ((a % m) + m) % m;
  for (std::int64_t x = 0; x < m; ++x)
    if ((x * x) % m == r) ++c;
  return c;
}

int chi_by_roots(std::int64_t disc, std::int64_t n) {
  if (n == 0) return (disc == 1 || disc == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (disc < 0) sign = -1;
  }
  int value = sign;
  for (std::int64_t p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      int cp;
      if (disc % p == 0) {
        cp = 0;
      } else if (p == 2) {
        // disc is odd here; solvable mod 8 iff disc = 1 mod 8.
        cp = square_root_count(disc, 8) > 0 ? 1 : -1;
      } else {
        cp = square_root_count(disc, p) - 1;
      }
      value *= cp;
    }
  }
  return value;
}

int quadratic_root_count(std::int64_t t, std::int64_t nrm, std::int64_t p) {
  int c = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = ((x * x - t * x + nrm) % p + p) % p;
    if (v == 0) ++c;
  }
  return c;
}

std::vector<Int> charpoly_mod(const IntRows& a, const Int& m) {
  const std::size_t n = a.size();
  auto md = [&m](const Int& v) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
  };
  // Berkowitz: build the coefficient vector (highest degree first).
  std::vector<Int> c{Int(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading k x k block is A_k; new row/col index k.
    const Int akk = a[k][k];
    std::vector<Int> col(k), row(k);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = a[i][k];
      row[i] = a[k][i];
    }
    // Toeplitz column entries: 1, -a_kk, -R C, -R A C, -R A^2 C, ...
    std::vector<Int> t(k + 2);
    t[0] = 1;
    t[1] = md(-akk);
    std::vector<Int> v = col;
    for (std::size_t j = 2; j < k + 2; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += row[i] * v[i];
      t[j] = md(-s);
      std::vector<Int> nv(k);
      for (std::size_t i = 0; i < k; ++i) {
        Int acc = 0;
        for (std::size_t l = 0; l < k; ++l) acc += a[i][l] * v[l];
        nv[i] = md(acc);
      }
      v = nv;
    }
    std::vector<Int> nc(k + 2, 0);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) nc[i] += t[i - j] * c[j];
    for (Int& x : nc) x = md(x);
    c = nc;
  }
  // c is highest degree first; flip to ascending.
  return std::vector<Int>(c.rbegin(), c.rend());
}

std::vector<Int> smith_diagonal(IntRows a) {
  const std::size_t n = a.size();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < n; ++t) {
    // Move a minimal non-zero entry of the trailing block to (t, t) and clear.
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == n || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == n) return diag;  // singular
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the rest by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

double l_three(std::int64_t disc, std::int64_t terms) {
  // chi is periodic modulo the conductor |disc|.
  const std::int64_t f = disc < 0 ? -disc : disc;
  std::vector<int> table(static_cast<std::size_t>(f));
  for (std::int64_t r = 0; r < f; ++r) table[static_cast<std::size_t>(r)] = chi_by_roots(disc, r == 0 ? f : r);
  long double sum = 0;
  for (std::int64_t n = terms; n >= 1; --n) {
    int c = table[static_cast<std::size_t>(n % f)];
    if (c == 0) continue;
    long double nn = static_cast<long double>(n);
    sum += c / (nn * nn * nn);
  }
  return static_cast<double>(sum);
}

std::vector<Int> naive_eta_product(const std::vector<std::pair<int, int>>& factors, int n_terms) {
  int shift24 = 0;
  for (auto [d, e] : factors) shift24 += d * e;
  if (shift24 % 24 != 0 || shift24 < 0) throw std::invalid_argument("non-integral shift");
  const int shift = shift24 / 24;
  std::vector<Int> poly(static_cast<std::size_t>(n_terms) + 1, 0);
  poly[0] = 1;
  auto mul_factor = [&](int step, bool inverse) {
    // multiply by (1 - q^step) or by 1/(1 - q^step) = sum q^{j step}
    if (!inverse) {
      for (int i = n_terms; i >= step; --i) poly[i] -= poly[i - step];
    } else {
      for (int i = step; i <= n_terms; ++i) poly[i] += poly[i - step];
    }
  };
  for (auto [d, e] : factors)
    for (int m = 1; d * m <= n_terms; ++m)
      for (int r = 0; r < std::abs(e); ++r) mul_factor(d * m, e < 0);
  std::vector<Int> out(static_cast<std::size_t>(n_terms) + 1, 0);
  for (int i = 0; i + shift <= n_terms; ++i) out[static_cast<std::size_t>(i + shift)] = poly[i];
  return out;
}

Int divisor_sum(std::int64_t disc, std::int64_t n, int k_minus_1, std::int64_t p) {
  Int s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (p > 0 && d % p == 0) continue;
    Int term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k_minus_1));
    s += chi_by_roots(disc, d) * term;
  }
  return s;
}

}  // namespace oracle
