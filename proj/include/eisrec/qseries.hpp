// Copyright 2026 The eisrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic core: rationals, Bernoulli numbers, divisor power sums and
// dense truncated power series over Q.
//
// Series are truncated at an inclusive order N and binary operations truncate
// to the smaller order of their operands. Nothing is ever silently extended.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eisrec/errors.hpp"

namespace eisrec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with decimal integers; the result is canonical.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw DomainError("not a rational literal: '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw DomainError("zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string format_rational(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace detail {

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

}  // namespace detail

/// Exact Bernoulli number B_k for even k >= 0, from the recurrence
/// sum_{j=0}^{k} C(k+1, j) B_j = 0. Convention B_1 = -1/2, so B_2 = 1/6.
/// Values are memoised; the cache is shared between threads.
inline Rational bernoulli(int k) {
  if (k < 0 || k % 2 != 0) {
    throw DomainError("bernoulli: k must be even and nonnegative, got " + std::to_string(k));
  }
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  std::lock_guard lock(mutex);
  while (cache.size() <= static_cast<std::size_t>(k)) {
    const auto m = static_cast<unsigned long>(cache.size());
    Rational acc = 0;
    // Odd-index terms beyond B_1 vanish.
    for (unsigned long j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      acc += Rational(detail::binomial(m + 1, j)) * cache[j];
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    cache.push_back(std::move(b));
  }
  return cache[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Divisor sums

/// sigma_ell(n) = sum of d^ell over the divisors d of n.
inline Integer sigma(unsigned ell, std::uint64_t n) {
  if (n == 0) throw DomainError("sigma: n must be positive");
  if (ell == 0) throw DomainError("sigma: ell must be positive");
  Integer total = 0;
  Integer term;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, ell);
    total += term;
    const std::uint64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), e, ell);
      total += term;
    }
  }
  return total;
}

/// sigma_ell(n) for n = 0..N by a divisor sieve; entry 0 is 0.
inline std::vector<Integer> sigma_table(unsigned ell, std::size_t N) {
  if (ell == 0) throw DomainError("sigma_table: ell must be positive");
  std::vector<Integer> table(N + 1, Integer(0));
  Integer power;
  for (std::size_t d = 1; d <= N; ++d) {
    mpz_ui_pow_ui(power.get_mpz_t(), d, ell);
    for (std::size_t m = d; m <= N; m += d) table[m] += power;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Truncated power series

class RationalSeries {
 public:
  /// The constant series 1 truncated at order 0.
  RationalSeries() : coeffs_{Rational(1)} {}

  /// Coefficients for q^0..q^N; the truncation order is coeffs.size() - 1.
  explicit RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("RationalSeries needs at least one coefficient");
    for (auto& c : coeffs_) c.canonicalize();
  }

  static RationalSeries constant(const Rational& c, std::size_t order) {
    std::vector<Rational> v(order + 1, Rational(0));
    v[0] = c;
    return RationalSeries(std::move(v));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  RationalSeries truncated(std::size_t order) const {
    if (order > this->order()) throw DomainError("truncated: cannot extend a series");
    return RationalSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
    return RationalSeries(std::move(v));
  }

  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
    return RationalSeries(std::move(v));
  }

  friend RationalSeries operator*(const Rational& c, const RationalSeries& s) {
    std::vector<Rational> v(s.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * s.coeffs_[i];
    return RationalSeries(std::move(v));
  }

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

namespace detail {

// Splits the coefficients into integers over a common denominator:
// s(n) = nums[n] / den.
inline std::pair<std::vector<Integer>, Integer> common_denominator(const RationalSeries& s) {
  Integer den = 1;
  for (const auto& c : s.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> nums(s.order() + 1);
  Integer scale;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    mpz_divexact(scale.get_mpz_t(), den.get_mpz_t(), s[i].get_den_mpz_t());
    nums[i] = s[i].get_num() * scale;
  }
  return {std::move(nums), std::move(den)};
}

}  // namespace detail

/// Cauchy product truncated at min(a.order(), b.order()).
inline RationalSeries multiply(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  auto [an, ad] = detail::common_denominator(a);
  auto [bn, bd] = detail::common_denominator(b);
  const Integer den = ad * bd;
  std::vector<Rational> out(n + 1);
  Integer acc;
  for (std::size_t i = 0; i <= n; ++i) {
    acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      mpz_addmul(acc.get_mpz_t(), an[j].get_mpz_t(), bn[i - j].get_mpz_t());
    }
    out[i] = Rational(acc, den);
  }
  return RationalSeries(std::move(out));
}

/// Multiplicative inverse through the series' own truncation order.
///
/// Solves r(n) = -(1/s(0)) sum_{j=1..n} s(j) r(n-j). With D the common
/// denominator of s(j)/s(0), the scaled values D^n r(n) s(0) are integers,
/// so the recurrence runs entirely in Z.
inline RationalSeries reciprocal(const RationalSeries& s) {
  if (sgn(s[0]) == 0) throw NonInvertibleError("reciprocal: constant term is zero");
  const std::size_t N = s.order();
  std::vector<Rational> u(N + 1);
  for (std::size_t j = 0; j <= N; ++j) u[j] = s[j] / s[0];

  Integer D = 1;
  for (std::size_t j = 1; j <= N; ++j) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), u[j].get_den_mpz_t());

  std::vector<Integer> t(N + 1, Integer(0));
  Integer dpow = 1;
  for (std::size_t j = 1; j <= N; ++j) {
    dpow *= D;
    Integer q;
    mpz_divexact(q.get_mpz_t(), dpow.get_mpz_t(), u[j].get_den_mpz_t());
    t[j] = u[j].get_num() * q;
  }

  std::vector<Integer> g(N + 1);
  g[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (sgn(t[j]) == 0) continue;
      mpz_submul(acc.get_mpz_t(), t[j].get_mpz_t(), g[n - j].get_mpz_t());
    }
    g[n].swap(acc);
  }

  std::vector<Rational> r(N + 1);
  dpow = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) dpow *= D;
    r[n] = Rational(g[n]) / (Rational(dpow) * s[0]);
  }
  return RationalSeries(std::move(r));
}

/// s^m by binary exponentiation, truncating at every step. m = 0 yields the
/// constant 1 at the order of s.
inline RationalSeries power(const RationalSeries& s, unsigned m) {
  RationalSeries result = RationalSeries::constant(Rational(1), s.order());
  if (m == 0) return result;
  RationalSeries base = s;
  bool first = true;
  while (m > 0) {
    if (m & 1u) {
      result = first ? base : multiply(result, base);
      first = false;
    }
    m >>= 1u;
    if (m > 0) base = multiply(base, base);
  }
  return result;
}

/// Theta = q d/dq: coefficient n becomes n * a(n).
inline RationalSeries theta(const RationalSeries& s) {
  std::vector<Rational> v(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) v[n] = Rational(static_cast<unsigned long>(n)) * s[n];
  return RationalSeries(std::move(v));
}

/// First index where a and b differ within their common order, or -1.
inline long first_mismatch(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return static_cast<long>(i);
  }
  return -1;
}

// JSON: {"truncation_order": N, "coeffs": ["p/q", ...]}
inline void to_json(nlohmann::json& j, const RationalSeries& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(format_rational(c));
  j = nlohmann::json{{"truncation_order", s.order()}, {"coeffs", std::move(arr)}};
}

inline void from_json(const nlohmann::json& j, RationalSeries& s) {
  const auto order = j.at("truncation_order").get<std::size_t>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != order + 1) {
    throw DomainError("RationalSeries JSON: coeffs length must be truncation_order + 1");
  }
  std::vector<Rational> v;
  v.reserve(arr.size());
  for (const auto& c : arr) v.push_back(parse_rational(c.get<std::string>()));
  s = RationalSeries(std::move(v));
}

}  // namespace eisrec
