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

// Certified evaluation of E_k and Theta(E_k) inside the unit disc, the two
// distinguished q-points q_i and q_rho, and the Gamma(1/4) closed form of
// E_4(q_i).

#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisrec/certified.hpp"
#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"
#include "eisrec/qseries.hpp"

namespace eisrec {

enum class SeriesKind { E, ThetaE };

// Upper bound of a * |q|.
inline Err operator*(const Err& a, const Rational& q) {
  Real r(Err::kPrec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDU);
  return a * Err::abs_of(r);
}


/// Evaluates E_k or Theta(E_k) at complex points with a cached table of
/// coefficients at one working precision.
///
/// The tail beyond the truncation order N is bounded with
/// sigma_l(n) < l/(l-1) n^l (l >= 2) or sigma_1(n) <= n^2, giving
///   |tail| <= |2k/B_k| C sum_{n>N} n^e r^n,   r = |q| upper bound,
/// which is summed as a geometric majorant.
class SeriesEvaluator {
 public:
  static constexpr std::size_t kInitialOrder = 64;
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

  SeriesEvaluator(Weight k, SeriesKind kind, mpfr_prec_t prec)
      : k_(k), kind_(kind), prec_(prec), x0_(eisenstein_scale(k)) {}

  Weight weight() const { return k_; }
  SeriesKind kind() const { return kind_; }
  mpfr_prec_t prec() const { return prec_; }
  std::size_t last_order() const { return last_order_; }

  /// Value at q with the truncation order chosen so that the tail bound does
  /// not exceed `tail_target`. The returned error includes the tail.
  BigComplex evaluate(const BigComplex& q, const Err& tail_target) {
    const Err radius = q.abs_upper();
    if (!(radius < Err(1.0))) throw DivergenceError("series evaluated at |q| >= 1");

    std::size_t N = kInitialOrder;
    Err tail = tail_bound(radius, N);
    while (tail_target < tail) {
      N *= 2;
      if (N > kMaxOrder) throw PrecisionError("series tail does not reach the requested bound");
      tail = tail_bound(radius, N);
    }
    ensure(N);
    last_order_ = N;

    BigComplex acc = BigComplex::real(coeffs_[N]);
    for (std::size_t n = N; n-- > 0;) {
      acc = acc * q;
      acc = BigComplex(acc.re() + coeffs_[n], acc.im());
    }
    return acc.with_added_err(tail);
  }

  /// Upper bound on |sum_{n>N} c_n q^n| for |q| <= radius.
  Err tail_bound(const Err& radius, std::size_t N) const {
    if (radius.is_zero()) return Err();
    const int ell = k_.value() - 1;
    unsigned long e = 0;
    Err lead;
    if (ell >= 2) {
      e = static_cast<unsigned long>(ell);
      lead = Err::abs_of(scale_upper()) * Rational(ell, ell - 1);
    } else {
      e = 2;
      lead = Err::abs_of(scale_upper());
    }
    if (kind_ == SeriesKind::ThetaE) ++e;

    // term(N+1) / (1 - rho), rho = r ((N+2)/(N+1))^e bounds every later ratio.
    const double n1 = static_cast<double>(N + 1);
    const Err term = Err(n1).pow(e) * radius.pow(N + 1);
    const Err rho = radius * Err((n1 + 1.0) / n1 * (1.0 + 1e-15)).pow(e);
    Err one_minus;
    {
      mpfr_t t;
      mpfr_init2(t, Err::kPrec);
      mpfr_ui_sub(t, 1, rho.real().get(), MPFR_RNDD);
      const bool ok = mpfr_sgn(t) > 0;
      const double d = mpfr_get_d(t, MPFR_RNDD);
      mpfr_clear(t);
      if (!ok || d <= 0) return Err::infinity();
      one_minus = Err(d);
    }
    return lead * term / one_minus;
  }

 private:
  // Err has no rational constructor; this keeps |x0| as an upward rounded Real.
  Real scale_upper() const {
    Real r(Err::kPrec);
    mpfr_set_q(r.get(), x0_.get_mpq_t(), MPFR_RNDA);
    return r;
  }

  void ensure(std::size_t N) {
    if (coeffs_.size() > N) return;
    const auto sig = sigma_table(static_cast<unsigned>(k_.value() - 1), N);
    const std::size_t start = coeffs_.size();
    coeffs_.reserve(N + 1);
    for (std::size_t n = start; n <= N; ++n) {
      if (n == 0) {
        coeffs_.push_back(BigReal::exact(kind_ == SeriesKind::E ? 1 : 0, prec_));
        continue;
      }
      Rational c = -x0_ * Rational(sig[n]);
      if (kind_ == SeriesKind::ThetaE) c *= Rational(static_cast<unsigned long>(n));
      coeffs_.push_back(BigReal::from_rational(c, prec_));
    }
  }

  Weight k_;
  SeriesKind kind_;
  mpfr_prec_t prec_;
  Rational x0_;
  std::vector<BigReal> coeffs_;
  std::size_t last_order_ = 0;
};

/// E_k(q) or Theta(E_k)(q) at the working precision of q, with err <= target.
inline BigComplex eval_series(Weight k, SeriesKind kind, const BigComplex& q, const Err& target) {
  SeriesEvaluator ev(k, kind, q.prec());
  BigComplex v = ev.evaluate(q, target * Err(0.5));
  if (target < v.err()) {
    throw PrecisionError("eval_series: error " + v.err().str() + " exceeds target " + target.str() +
                         " at " + std::to_string(q.prec()) + " bits");
  }
  return v;
}

enum class SpecialPoint { qi, qrho };

/// q_i = e^{-2 pi} or q_rho = -e^{-pi sqrt 3}.
inline BigComplex special_point(SpecialPoint which, mpfr_prec_t prec) {
  const auto pi = BigReal::pi(prec);
  if (which == SpecialPoint::qi) {
    return BigComplex::real(exp(-(BigReal::exact(2, prec) * pi)));
  }
  return BigComplex::real(-exp(-(pi * sqrt(BigReal::exact(3, prec)))));
}

// ---------------------------------------------------------------------------
// Configuration

struct AnalyticConfig {
  long precision_bits = 256;
  std::optional<std::string> gamma_quarter;
  std::string gamma_quarter_err = "0";
};

inline AnalyticConfig parse_config(const nlohmann::json& j) {
  AnalyticConfig c;
  if (j.contains("precision_bits")) c.precision_bits = j.at("precision_bits").get<long>();
  if (j.contains("gamma_quarter")) c.gamma_quarter = j.at("gamma_quarter").get<std::string>();
  if (j.contains("gamma_quarter_err")) c.gamma_quarter_err = j.at("gamma_quarter_err").get<std::string>();
  if (c.precision_bits < 2) throw ConfigError("precision_bits must be >= 2");
  return c;
}

inline AnalyticConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return parse_config(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad config file '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Closed form of E_4(q_i)

struct GammaQuarterReport {
  BigReal series_value;   // E_4(q_i) from the q-expansion
  BigReal closed_form;    // 3 Gamma(1/4)^8 / (2 pi)^6
  bool consistent;        // the two enclosures overlap
  int agreement_digits;   // decimal digits on which the two values agree
};

inline int agreement_digits(const BigReal& a, const BigReal& b) {
  const BigReal d = a - b;
  if (d.value().is_zero()) return static_cast<int>(std::floor(static_cast<double>(a.prec()) * std::log10(2.0)));
  Real ad(64);
  mpfr_abs(ad.get(), d.value().get(), MPFR_RNDU);
  mpfr_log10(ad.get(), ad.get(), MPFR_RNDU);
  return std::max(0, static_cast<int>(std::floor(-ad.to_double())));
}

inline GammaQuarterReport gamma_quarter_check(mpfr_prec_t prec, const AnalyticConfig& config) {
  if (!config.gamma_quarter) throw ConfigError("gamma_quarter constant missing from configuration");
  const auto q = special_point(SpecialPoint::qi, prec);
  SeriesEvaluator ev(Weight(4), SeriesKind::E, prec);
  const BigReal series = ev.evaluate(q, Err::pow2(-static_cast<long>(prec))).re();
  const BigReal g = BigReal::from_decimal(*config.gamma_quarter, prec, Err::from_string(config.gamma_quarter_err));
  const BigReal two_pi = BigReal::exact(2, prec) * BigReal::pi(prec);
  const BigReal closed = BigReal::exact(3, prec) * pow(g, 8) / pow(two_pi, 6);
  const BigReal diff = series - closed;
  return {series, closed, diff.certain_sign() == 0, agreement_digits(series, closed)};
}

// ---------------------------------------------------------------------------
// Theta(E_k) at a pole

struct PoleData {
  BigComplex q;
  BigComplex theta_value;  // Theta(E_k)(q)
  BigComplex residue;      // q / Theta(E_k)(q)
};

inline PoleData theta_at_pole(Weight k, const BigComplex& q0) {
  SeriesEvaluator ev(k, SeriesKind::ThetaE, q0.prec());
  BigComplex t = ev.evaluate(q0, Err::pow2(-static_cast<long>(q0.prec())));
  BigComplex res = q0 / t;
  return {q0, std::move(t), std::move(res)};
}

}  // namespace eisrec
