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

// Growth, ratio limits, residuals and sign statistics of the coefficients
// beta_k(n) of 1/E_k and beta_{4,m}(n) of 1/E_4^m.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisrec/analytic.hpp"
#include "eisrec/certified.hpp"
#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"
#include "eisrec/qseries.hpp"
#include "eisrec/zeros.hpp"

namespace eisrec {

struct CoeffTable {
  int k;
  int m;  // power of 1/E_k
  std::vector<Rational> betas;

  std::size_t n_max() const { return betas.empty() ? 0 : betas.size() - 1; }
  /// beta(n) / beta(n+1), or nullopt when beta(n+1) = 0.
  std::optional<Rational> ratio(std::size_t n) const {
    if (sgn(betas.at(n + 1)) == 0) return std::nullopt;
    Rational r = betas.at(n) / betas.at(n + 1);
    return r;
  }
};

/// Exact coefficients of (1/E_k)^m through q^{n_max}.
inline CoeffTable beta_table(Weight k, std::size_t n_max, int m = 1) {
  if (m < 1) throw DomainError("beta_table: power must be >= 1");
  RationalSeries r = reciprocal(eisenstein_series(k, n_max));
  if (m > 1) r = power(r, static_cast<unsigned>(m));
  return {k.value(), m, {r.coeffs().begin(), r.coeffs().end()}};
}

inline nlohmann::json to_json(const CoeffTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n < t.betas.size(); ++n) {
    rows.push_back({{"n", n}, {"beta", format_rational(t.betas[n])}});
  }
  return {{"k", t.k}, {"m", t.m}, {"n_max", t.n_max()}, {"rows", rows}};
}

// ---------------------------------------------------------------------------
// Ratio limits

struct RatioRow {
  std::size_t n;
  std::optional<BigReal> ratio;     // beta(n) / beta(n+1)
  std::optional<BigReal> distance;  // |ratio - target|
};

struct RatioReport {
  int k;
  int m;
  std::string pole;  // "q_i" or "q_rho"
  BigReal target;
  double tolerance;
  std::vector<RatioRow> rows;
  bool pass;
};

inline SpecialPoint dominant_real_pole(Weight k, int m) {
  const int w = k.value();
  if (m == 1 && w % 4 == 2 && w >= 6) return SpecialPoint::qi;
  if (w == 4 || (w == 8 && m == 1)) return SpecialPoint::qrho;
  throw DomainError("no real dominant pole claimed for k = " + std::to_string(w) + ", m = " + std::to_string(m));
}

/// |beta(n)/beta(n+1) - q_pole| for n < n_max; passes when the last ratio
/// lies within tolerance of the pole.
inline RatioReport ratio_limit_check(Weight k, std::size_t n_max, int m = 1, double tolerance = 1e-8,
                                     mpfr_prec_t prec = 128) {
  if (n_max < 1) throw DomainError("ratio_limit_check: n_max must be >= 1");
  const SpecialPoint which = dominant_real_pole(k, m);
  const BigReal target = special_point(which, prec).re();
  const CoeffTable t = beta_table(k, n_max, m);
  RatioReport rep{k.value(), m, which == SpecialPoint::qi ? "q_i" : "q_rho", target, tolerance, {}, false};
  for (std::size_t n = 0; n < n_max; ++n) {
    const auto r = t.ratio(n);
    if (!r) {
      throw IntegrityError("beta_" + std::to_string(k.value()) + "(" + std::to_string(n + 1) +
                           ") vanishes although the coefficients are provably nonzero");
    }
    BigReal v = BigReal::from_rational(*r, prec);
    BigReal d = abs(v - target);
    rep.rows.push_back({n, std::move(v), std::move(d)});
  }
  const auto& last = rep.rows.back().distance;
  rep.pass = last && last->to_double() + last->err().to_double() < tolerance;
  return rep;
}

// ---------------------------------------------------------------------------
// Cross-weight ratios

struct CrossRow {
  std::size_t n;
  BigReal ratio;
  int digits;  // decimal agreement with E_4(q_i)
};

struct CrossReport {
  int k1;
  int k2;
  BigReal target;  // E_4(q_i)
  std::vector<CrossRow> rows;
};

/// beta_{k1}(n)/beta_{k2}(n) against E_4(q_i), for (6, 10) and (10, 14).
inline CrossReport cross_weight_ratio(Weight k1, Weight k2, std::size_t n_max, mpfr_prec_t prec = 256) {
  const bool ok = (k1.value() == 6 && k2.value() == 10) || (k1.value() == 10 && k2.value() == 14);
  if (!ok) throw DomainError("cross_weight_ratio: supported pairs are (6, 10) and (10, 14)");
  const auto q = special_point(SpecialPoint::qi, prec);
  SeriesEvaluator ev(Weight(4), SeriesKind::E, prec);
  BigReal target = ev.evaluate(q, Err::pow2(-static_cast<long>(prec))).re();
  const CoeffTable a = beta_table(k1, n_max);
  const CoeffTable b = beta_table(k2, n_max);
  CrossReport rep{k1.value(), k2.value(), target, {}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigReal r = BigReal::from_rational(Rational(a.betas[n] / b.betas[n]), prec);
    const int d = agreement_digits(r, target);
    rep.rows.push_back({n, std::move(r), d});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// One-pole asymptotics

/// -q0^{-n} / Theta(E_k)(q0) for the real dominant pole q0.
inline BigReal one_pole_asymptotic(Weight k, std::size_t n, mpfr_prec_t prec = 128) {
  const int w = k.value();
  if (!(w == 4 || (w % 4 == 2 && w >= 6))) {
    throw DomainError("one_pole_asymptotic: need k = 4 or k = 2 mod 4 with k >= 6");
  }
  const SpecialPoint which = w == 4 ? SpecialPoint::qrho : SpecialPoint::qi;
  const PoleData p = theta_at_pole(k, special_point(which, prec));
  const BigReal q0 = p.q.re();
  return -(BigReal::exact(1, prec) / (pow(q0, n) * p.theta_value.re()));
}

/// beta_k(n) / one_pole_asymptotic(k, n).
inline BigReal one_pole_ratio(Weight k, std::size_t n, mpfr_prec_t prec = 128) {
  const CoeffTable t = beta_table(k, n);
  return BigReal::from_rational(t.betas[n], prec) / one_pole_asymptotic(k, n, prec);
}

/// (-1)^n 3/E_6(q_rho) e^{pi n sqrt 3} for k = 4, 2/E_8(q_i) e^{2 pi n} for k = 6.
inline BigReal hr_leading_term(Weight k, std::size_t n, mpfr_prec_t prec = 128) {
  const auto pi = BigReal::pi(prec);
  const BigReal nn = BigReal::from_integer(Integer(static_cast<unsigned long>(n)), prec);
  const Err target = Err::pow2(16 - static_cast<long>(prec));
  if (k.value() == 4) {
    const auto q = special_point(SpecialPoint::qrho, prec);
    const BigReal e6 = eval_series(Weight(6), SeriesKind::E, q, target).re();
    BigReal v = BigReal::exact(3, prec) / e6 * exp(pi * nn * sqrt(BigReal::exact(3, prec)));
    return n % 2 == 0 ? v : -v;
  }
  if (k.value() == 6) {
    const auto q = special_point(SpecialPoint::qi, prec);
    const BigReal e8 = eval_series(Weight(8), SeriesKind::E, q, target).re();
    return BigReal::exact(2, prec) / e8 * exp(BigReal::exact(2, prec) * pi * nn);
  }
  throw DomainError("hr_leading_term: k must be 4 or 6");
}

// ---------------------------------------------------------------------------
// Two-pole residuals for k = 0 mod 4, k >= 12

inline void require_two_pole_weight(Weight k) {
  if (k.value() < 12 || k.value() % 4 != 0) {
    throw DomainError("two-pole analysis needs k >= 12 with k = 0 mod 4, got " + std::to_string(k.value()));
  }
}

/// Working precision for n up to n_max: n_max 2 pi y / ln 2 + 128 bits with
/// y < 1 on the arc.
inline long residual_precision(std::size_t n_max) {
  return static_cast<long>(std::ceil(static_cast<double>(n_max) * 2.0 * M_PI / std::log(2.0))) + 128;
}

/// Shared data of the conjugate pole pair q, conj(q) of 1/E_k.
struct PolePair {
  ZeroRecord zero;
  BigComplex q;
  BigComplex C;  // 1 / Theta(E_k)(q)
  BigComplex u;  // q / conj(q)
  BigReal abs_q;
};

inline PolePair pole_pair(Weight k, long bits) {
  require_two_pole_weight(k);
  ZeroRecord z = largest_imag_zero(k, bits);
  const mpfr_prec_t prec = z.q_point.prec();
  BigComplex q = z.q_point;
  BigComplex C = BigComplex::real(BigReal::exact(1, prec)) / z.theta_Ek;
  BigComplex u = q / q.conj();
  BigReal aq = abs(q);
  return {std::move(z), std::move(q), std::move(C), std::move(u), std::move(aq)};
}

struct ResidualRow {
  std::size_t n;
  BigComplex r;        // beta(n) q^n + C + conj(C) u^n
  BigReal bounded_abs; // |C + conj(C) u^n|
};

struct ResidualReport {
  int k;
  std::size_t n_max;
  long precision_bits;
  PolePair pole;
  std::vector<ResidualRow> rows;  // n = 0 .. n_max
  std::size_t lead_lo, lead_hi, trail_lo, trail_hi;
  Err lead_max_lower;   // lower bound of max |r| over the leading window
  Err trail_max_upper;  // upper bound of max |r| over the trailing window
  bool decay_pass;
  bool bounded_pass;
  bool pass() const { return decay_pass && bounded_pass; }
};

/// r(n) for n <= n_max with the decay test
/// max_{trail} |r| < max_{lead} |r| / 4, lead = [1, n_max/4], trail = [3 n_max/4, n_max].
inline ResidualReport residual_sequence(Weight k, std::size_t n_max) {
  require_two_pole_weight(k);
  if (n_max < 8) throw DomainError("residual_sequence: n_max must be >= 8");
  const long bits = residual_precision(n_max);
  PolePair pp = pole_pair(k, bits);
  const mpfr_prec_t prec = pp.q.prec();
  const CoeffTable t = beta_table(k, n_max);

  ResidualReport rep{k.value(), n_max, bits, pp, {}, 1, n_max / 4, (3 * n_max) / 4, n_max, Err(0), Err(0), false, true};
  const BigReal two_C = BigReal::exact(2, prec) * abs(pp.C);
  BigComplex qn = BigComplex::real(BigReal::exact(1, prec));
  BigComplex un = qn;
  const BigComplex Cbar = pp.C.conj();
  for (std::size_t n = 0; n <= n_max; ++n) {
    const BigComplex bounded = pp.C + Cbar * un;
    const BigComplex r = BigReal::from_rational(t.betas[n], prec) * qn + bounded;
    BigReal babs = abs(bounded);
    if (certainly_less(two_C, babs)) rep.bounded_pass = false;
    rep.rows.push_back({n, r, std::move(babs)});
    qn *= pp.q;
    un *= pp.u;
  }

  Real lower(Err::kPrec);
  for (std::size_t n = rep.lead_lo; n <= rep.lead_hi; ++n) {
    const BigReal a = abs(rep.rows[n].r);
    Real lo(Err::kPrec);
    mpfr_sub(lo.get(), a.value().get(), a.err().real().get(), MPFR_RNDD);
    if (mpfr_cmp(lo.get(), lower.get()) > 0) mpfr_set(lower.get(), lo.get(), MPFR_RNDD);
  }
  rep.lead_max_lower = Err::abs_of(lower);
  for (std::size_t n = rep.trail_lo; n <= rep.trail_hi; ++n) {
    rep.trail_max_upper = Err::max(rep.trail_max_upper, rep.rows[n].r.abs_upper());
  }
  if (lower.sign() <= 0) {
    throw PrecisionError("residual_sequence: leading residuals are not resolved at " + std::to_string(bits) +
                         " bits; raise the precision");
  }
  rep.decay_pass = rep.trail_max_upper * Err(4.0) < rep.lead_max_lower;
  return rep;
}

struct SubsequencePick {
  std::size_t n;
  BigReal denominator;  // -2 Re(C (|q|/q)^n), the main term scaled by |q|^n
  BigReal ratio;        // beta(n) / (-2 Re(q^{-n} C))
};

struct SubsequenceReport {
  int k;
  std::size_t n_max;
  std::size_t window;
  std::vector<SubsequencePick> picks;
  std::vector<std::size_t> skipped;  // first n of each skipped window
  double tolerance;
  bool pass;
};

/// In each window [w j + 1, w (j+1)] pick the n maximizing |2 Re(C (|q|/q)^n)|
/// and report beta(n) / (-2 Re(q^{-n} C)). A window whose best value is below
/// 0.1 |C| is skipped. Passes when the last ratio lies within tolerance of 1.
inline SubsequenceReport subsequence_extract(Weight k, std::size_t n_max, std::size_t window = 8,
                                             double tolerance = 0.05) {
  require_two_pole_weight(k);
  if (window < 1 || window > n_max) throw DomainError("subsequence_extract: bad window length");
  const long bits = residual_precision(n_max);
  const PolePair pp = pole_pair(k, bits);
  const mpfr_prec_t prec = pp.q.prec();
  const CoeffTable t = beta_table(k, n_max);

  // v = |q|/q = conj(q)/|q|, unimodular.
  const BigComplex v = BigComplex(pp.q.re() / pp.abs_q, -(pp.q.im() / pp.abs_q));
  const BigReal guard = BigReal::from_rational(Rational(1, 10), prec) * abs(pp.C);

  SubsequenceReport rep{k.value(), n_max, window, {}, {}, tolerance, false};
  BigComplex vn = BigComplex::real(BigReal::exact(1, prec));
  BigReal qn = BigReal::exact(1, prec);
  std::optional<SubsequencePick> best;
  std::size_t start = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    vn *= v;
    qn = qn * pp.abs_q;
    BigReal den = -(BigReal::exact(2, prec) * (pp.C * vn).re());
    if (!best || mpfr_cmpabs(best->denominator.value().get(), den.value().get()) < 0) {
      best = SubsequencePick{n, den, BigReal::from_rational(t.betas[n], prec) * qn / den};
    }
    if (n - start + 1 == window || n == n_max) {
      if (n - start + 1 == window) {
        if (certainly_less(abs(best->denominator), guard) || abs(best->denominator).certain_sign() == 0) {
          rep.skipped.push_back(start);
        } else {
          rep.picks.push_back(*best);
        }
      }
      best.reset();
      start = n + 1;
    }
  }
  if (!rep.picks.empty()) {
    const BigReal dev = abs(rep.picks.back().ratio - BigReal::exact(1, prec));
    rep.pass = dev.to_double() + dev.err().to_double() < tolerance;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Sign statistics

struct CoeffStats {
  int k;
  std::size_t n_max;
  std::vector<std::size_t> A;  // A[n]: sign changes in beta(0..n), zeros removed
  std::vector<std::size_t> B;  // B[n]: nonzero values among beta(0..n-1)
  Rational density(std::size_t n) const {
    Rational r(static_cast<unsigned long>(A.at(n)), static_cast<unsigned long>(n));
    r.canonicalize();
    return r;
  }
};

inline CoeffStats sign_stats(const CoeffTable& t) {
  CoeffStats s{t.k, t.n_max(), {}, {}};
  s.A.assign(t.betas.size(), 0);
  s.B.assign(t.betas.size(), 0);
  int prev = 0;
  std::size_t changes = 0, nonzero = 0;
  for (std::size_t n = 0; n < t.betas.size(); ++n) {
    s.B[n] = nonzero;
    const int sg = sgn(t.betas[n]);
    if (sg != 0) {
      if (prev != 0 && sg != prev) ++changes;
      prev = sg;
      ++nonzero;
    }
    s.A[n] = changes;
  }
  return s;
}

inline CoeffStats sign_stats(Weight k, std::size_t n_max) {
  if (k.value() < 4) throw DomainError("sign_stats: weight must be >= 4");
  return sign_stats(beta_table(k, n_max));
}

struct DensityRow {
  int ell;
  BigReal two_x;      // 2 Re z_{4 ell}
  Rational estimate;  // A_{4 ell}(n_est) / n_est
};

struct DensityReport {
  std::size_t n_est;
  std::vector<DensityRow> rows;
  bool pass;  // 2 x at the largest ell is below every earlier value
};

inline DensityReport density_trend(int l_max, std::size_t n_est = 200) {
  if (l_max < 4) throw DomainError("density_trend: l_max must be >= 4");
  if (n_est < 1) throw DomainError("density_trend: n_est must be >= 1");
  DensityReport rep{n_est, {}, true};
  for (int ell = 3; ell <= l_max; ++ell) {
    const Weight k(4 * ell);
    const ZeroRecord z = largest_imag_zero(k);
    BigReal two_x = BigReal::exact(2, z.z.prec()) * z.z.re();
    rep.rows.push_back({ell, std::move(two_x), sign_stats(k, n_est).density(n_est)});
  }
  const BigReal& last = rep.rows.back().two_x;
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    if (!certainly_less(last, rep.rows[i].two_x)) rep.pass = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Integrality of beta_4

struct IntegralityReport {
  std::size_t n_max;
  bool pass;
};

/// beta_4(n) is an integer, (-1)^n beta_4(n) > 0 and 240 | beta_4(n) for
/// 1 <= n <= n_max. Throws IntegrityError on the first violation.
inline IntegralityReport integrality_check(std::size_t n_max) {
  const CoeffTable t = beta_table(Weight(4), n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational& b = t.betas[n];
    const std::string where = "beta_4(" + std::to_string(n) + ")";
    if (!is_integer(b)) throw IntegrityError(where + " is not an integer");
    const int expected = n % 2 == 0 ? 1 : -1;
    if (sgn(b) != expected) throw IntegrityError(where + " has the wrong sign");
    if (!mpz_divisible_ui_p(b.get_num_mpz_t(), 240)) throw IntegrityError(where + " is not divisible by 240");
  }
  return {n_max, true};
}

}  // namespace eisrec
