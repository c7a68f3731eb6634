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

// Two-term recurrences bracketing beta_k(n) for k = 2 mod 4.
//
// With eps(n) = (2k/B_k) sigma_{k-1}(n) and E_k = 1 - sum eps(n) q^n:
//   alpha: 1/(1 - eps(1) q - eps(2) q^2)            (lower bound)
//   gamma: (1 - a q)/(1 - b q - c q^2)               (upper bound)
// where b = eps(1) + a, c = eps(2) - a eps(1), and a = sqrt(7/3) for k = 2,
// a = (3^{k-1} + 1)/(2^{k-1} + 1) otherwise. The gamma numerator gives the
// dominating sequence delta(1) = eps(1), delta(n) = eps(2) a^{n-2}.
//
// Everything below is exact in Q(sqrt 21); closed forms through the
// characteristic roots are evaluated with certified error for comparison.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eisrec/certified.hpp"
#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"
#include "eisrec/qseries.hpp"
#include "eisrec/quadratic.hpp"

namespace eisrec {

struct BoundParams {
  int k;
  Rational x0;     // 2k/B_k = eps(1)
  Rational eps2;   // eps(2) = x0 (2^{k-1} + 1)
  Surd21 a;
  Surd21 b;
  Surd21 c;
  Rational Delta;  // x0^2 + 4 (2^{k-1} + 1) x0
  Surd21 D;        // b^2 + 4c
};

inline void require_bound_weight(Weight k) {
  if (k.value() % 4 != 2) {
    throw DomainError("bounds need k = 2 mod 4, got " + std::to_string(k.value()));
  }
}

inline BoundParams bound_params(Weight k) {
  require_bound_weight(k);
  const int w = k.value();
  Integer two_pow, three_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(w - 1));
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(w - 1));
  const Rational s2(two_pow + 1);  // sigma_{k-1}(2)
  const Rational s3(three_pow + 1);

  BoundParams p{w, eisenstein_scale(k), 0, {}, {}, {}, 0, {}};
  p.eps2 = p.x0 * s2;
  p.a = (w == 2) ? Surd21(Rational(0), Rational(1, 3)) : Surd21(Rational(s3 / s2));
  p.b = Surd21(p.x0) + p.a;
  p.c = (Surd21(s2) - p.a) * Surd21(p.x0);
  p.Delta = p.x0 * p.x0 + Rational(4) * s2 * p.x0;
  p.D = p.b * p.b + Surd21(Rational(4)) * p.c;
  p.eps2.canonicalize();
  p.Delta.canonicalize();
  return p;
}

struct CharacteristicRoots {
  BigReal sqrt_Delta;
  BigReal lambda_plus;   // (x0 + sqrt Delta)/2
  BigReal lambda_minus;  // (x0 - sqrt Delta)/2
  BigReal sqrt_D;
  BigReal mu_plus;       // (b + sqrt D)/2
  BigReal mu_minus;      // (b - sqrt D)/2
  BigReal M_plus;        // (x0 - mu_minus)/sqrt D
  BigReal M_minus;       // (mu_plus - x0)/sqrt D
};

inline CharacteristicRoots characteristic_roots(const BoundParams& p, mpfr_prec_t prec) {
  const BigReal two = BigReal::exact(2, prec);
  const BigReal x0 = BigReal::from_rational(p.x0, prec);
  CharacteristicRoots r;
  r.sqrt_Delta = sqrt(BigReal::from_rational(p.Delta, prec));
  r.lambda_plus = (x0 + r.sqrt_Delta) / two;
  r.lambda_minus = (x0 - r.sqrt_Delta) / two;
  const BigReal b = p.b.to_big_real(prec);
  r.sqrt_D = sqrt(p.D.to_big_real(prec));
  r.mu_plus = (b + r.sqrt_D) / two;
  r.mu_minus = (b - r.sqrt_D) / two;
  r.M_plus = (x0 - r.mu_minus) / r.sqrt_D;
  r.M_minus = (r.mu_plus - x0) / r.sqrt_D;
  return r;
}

/// alpha(0..n_max) from alpha(n) = eps(1) alpha(n-1) + eps(2) alpha(n-2).
inline std::vector<Rational> alpha_sequence(const BoundParams& p, std::size_t n_max) {
  std::vector<Rational> a(n_max + 1);
  a[0] = 1;
  if (n_max >= 1) a[1] = p.x0;
  for (std::size_t n = 2; n <= n_max; ++n) a[n] = p.x0 * a[n - 1] + p.eps2 * a[n - 2];
  return a;
}

/// delta(n): eps(1) for n = 1, eps(2) a^{n-2} for n >= 2.
inline Surd21 delta_sequence(Weight k, std::size_t n) {
  if (n == 0) throw DomainError("delta_sequence: n must be positive");
  const BoundParams p = bound_params(k);
  if (n == 1) return Surd21(p.x0);
  Surd21 v(p.eps2);
  for (std::size_t j = 2; j < n; ++j) v *= p.a;
  return v;
}

/// gamma(0..n_max) = sum_{j=1..n} delta(j) gamma(n-j), gamma(0) = 1.
///
/// The geometric tail of delta lets the convolution run in O(n):
///   S(n) = sum_{j=2..n} a^{j-2} gamma(n-j) = gamma(n-2) + a S(n-1).
inline std::vector<Surd21> gamma_sequence(const BoundParams& p, std::size_t n_max) {
  std::vector<Surd21> g(n_max + 1);
  g[0] = Surd21(Rational(1));
  Surd21 S(Rational(0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n >= 2) S = g[n - 2] + p.a * S;
    g[n] = Surd21(p.x0) * g[n - 1] + Surd21(p.eps2) * S;
  }
  return g;
}

/// Exact beta_k(0..n_max) by series inversion of E_k.
inline std::vector<Rational> beta_sequence(Weight k, std::size_t n_max) {
  const auto r = reciprocal(eisenstein_series(k, n_max));
  return {r.coeffs().begin(), r.coeffs().end()};
}

struct LowerBound {
  Rational exact;  // alpha_k(n) by recurrence
  BigReal closed;  // (lambda+^{n+1} - lambda-^{n+1}) / sqrt Delta
  bool agree;
};

struct UpperBound {
  Surd21 exact;    // gamma_k(n) by delta convolution
  BigReal closed;  // M+ mu+^n + M- mu-^n
  bool agree;
};

inline LowerBound lower_bound(Weight k, std::size_t n, mpfr_prec_t prec = 128) {
  const BoundParams p = bound_params(k);
  const auto r = characteristic_roots(p, prec);
  Rational exact = alpha_sequence(p, n)[n];
  BigReal closed = (pow(r.lambda_plus, n + 1) - pow(r.lambda_minus, n + 1)) / r.sqrt_Delta;
  const bool agree = (closed - BigReal::from_rational(exact, prec)).certain_sign() == 0;
  return {std::move(exact), std::move(closed), agree};
}

inline UpperBound upper_bound(Weight k, std::size_t n, mpfr_prec_t prec = 128) {
  const BoundParams p = bound_params(k);
  const auto r = characteristic_roots(p, prec);
  Surd21 exact = gamma_sequence(p, n)[n];
  BigReal closed = r.M_plus * pow(r.mu_plus, n) + r.M_minus * pow(r.mu_minus, n);
  const bool agree = (closed - exact.to_big_real(prec)).certain_sign() == 0;
  return {std::move(exact), std::move(closed), agree};
}

struct SandwichReport {
  int k;
  std::size_t n_max;
  bool pass;
  long first_violation;              // -1 when pass
  std::vector<std::size_t> lower_equal;  // n with alpha(n) = beta(n)
  std::vector<std::size_t> upper_equal;  // n with beta(n) = gamma(n)
};

/// alpha(n) <= beta(n) <= gamma(n) for 1 <= n <= n_max, all exact.
inline SandwichReport sandwich_check(Weight k, std::size_t n_max) {
  const BoundParams p = bound_params(k);
  const auto alpha = alpha_sequence(p, n_max);
  const auto gamma = gamma_sequence(p, n_max);
  const auto beta = beta_sequence(k, n_max);
  SandwichReport rep{k.value(), n_max, true, -1, {}, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const int lo = sgn(beta[n] - alpha[n]);
    const int hi = (gamma[n] - Surd21(beta[n])).sign();
    if (lo < 0 || hi < 0) {
      rep.pass = false;
      rep.first_violation = static_cast<long>(n);
      break;
    }
    if (lo == 0) rep.lower_equal.push_back(n);
    if (hi == 0) rep.upper_equal.push_back(n);
  }
  return rep;
}

struct DominanceReport {
  int k;
  std::size_t n_max;
  bool pass;
  long first_violation;
};

/// eps(n) <= delta(n) for 3 <= n <= n_max (equality at n = 1, 2).
inline DominanceReport dominance_check(Weight k, std::size_t n_max) {
  const BoundParams p = bound_params(k);
  const auto sig = sigma_table(static_cast<unsigned>(k.value() - 1), n_max);
  DominanceReport rep{k.value(), n_max, true, -1};
  Surd21 delta(p.eps2);
  for (std::size_t n = 3; n <= n_max; ++n) {
    delta *= p.a;
    const Rational eps = p.x0 * Rational(sig[n]);
    if ((delta - Surd21(eps)).sign() < 0) {
      rep.pass = false;
      rep.first_violation = static_cast<long>(n);
      break;
    }
  }
  return rep;
}

/// 3 ((1 + 3^-l)/(1 + 2^-l))^{1/l} > 2.98, decided as
/// 3^l + 1 > 2.98^l (1 + 2^-l) in exact arithmetic.
inline bool power_ratio_bound_holds(unsigned ell) {
  Integer three;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, ell);
  Integer two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, ell);
  Rational lhs(three + 1);
  Rational base(149, 50);
  Rational rhs = 1;
  for (unsigned i = 0; i < ell; ++i) rhs *= base;
  rhs *= Rational(1) + Rational(Integer(1), two);
  return lhs > rhs;
}

// ---------------------------------------------------------------------------
// Table of bounds for beta_6 with the historical display bounds

/// (535^{n+1} - (-31)^{n+1}) / 566
inline Rational hr_lower_display(std::size_t n) {
  Integer a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 535, n + 1);
  mpz_ui_pow_ui(b.get_mpz_t(), 31, n + 1);
  if ((n + 1) % 2 == 1) b = -b;
  Rational v(a - b, Integer(566));
  v.canonicalize();
  return v;
}

/// (352 * 535.5^n + 21 (-24)^n) / 373
inline Rational hr_upper_display(std::size_t n) {
  Integer a, two, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 1071, n);
  mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
  mpz_ui_pow_ui(b.get_mpz_t(), 24, n);
  if (n % 2 == 1) b = -b;
  Rational v = Rational(352) * Rational(a, two) + Rational(21) * Rational(b);
  return v / Rational(373);
}

struct BoundsRow {
  std::size_t n;
  std::optional<Rational> hr_lower;  // only for k = 6
  Rational alpha;
  Rational beta;
  Surd21 gamma;
  std::optional<Rational> hr_upper;
};

inline std::vector<BoundsRow> bounds_table(Weight k, std::size_t n_max) {
  const BoundParams p = bound_params(k);
  const auto alpha = alpha_sequence(p, n_max);
  const auto gamma = gamma_sequence(p, n_max);
  const auto beta = beta_sequence(k, n_max);
  std::vector<BoundsRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BoundsRow r{n, std::nullopt, alpha[n], beta[n], gamma[n], std::nullopt};
    if (k.value() == 6) {
      r.hr_lower = hr_lower_display(n);
      r.hr_upper = hr_upper_display(n);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace eisrec
