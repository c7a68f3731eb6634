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

// RAII wrapper around mpfr_t plus a small upward-rounded error-bound type.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "eisrec/errors.hpp"

namespace eisrec {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits, e.g. "-4.3334e-03".
  std::string sci(int digits) const { return format("%.*Re", digits - 1); }
  /// Fixed notation with `decimals` digits after the point.
  std::string fixed(int decimals) const { return format("%.*Rf", decimals); }

 private:
  std::string format(const char* fmt, int digits) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  mpfr_t v_;
};

/// Nonnegative error bound. All operations round toward +infinity, so the
/// stored value never underestimates the quantity it bounds. The exponent
/// range is MPFR's, far wider than double.
class Err {
 public:
  static constexpr mpfr_prec_t kPrec = 53;

  Err() : v_(kPrec) {}
  explicit Err(double d) : v_(kPrec) {
    if (!(d >= 0)) throw DomainError("Err: bound must be nonnegative");
    mpfr_set_d(v_.get(), d, MPFR_RNDU);
  }

  static Err from_string(const std::string& s) {
    Err e;
    if (mpfr_set_str(e.v_.get(), s.c_str(), 10, MPFR_RNDU) != 0 || mpfr_sgn(e.v_.get()) < 0) {
      throw DomainError("Err: cannot parse '" + s + "'");
    }
    return e;
  }

  /// 2^e.
  static Err pow2(long e) {
    Err r;
    mpfr_set_ui_2exp(r.v_.get(), 1, e, MPFR_RNDU);
    return r;
  }

  /// Upper bound for the rounding error of a correctly rounded result x,
  /// i.e. one ulp at x's precision (twice the half-ulp bound).
  static Err ulp(const Real& x) {
    if (x.is_zero() || !mpfr_number_p(x.get())) return Err();
    return pow2(mpfr_get_exp(x.get()) - x.prec());
  }

  /// |x| rounded up.
  static Err abs_of(const Real& x) {
    Err r;
    mpfr_abs(r.v_.get(), x.get(), MPFR_RNDU);
    return r;
  }

  /// |x| - e rounded down; throws if the result is not positive.
  static Err gap_below(const Real& x, const Err& e, const char* what) {
    Err r;
    mpfr_t ax;
    mpfr_init2(ax, kPrec);
    mpfr_abs(ax, x.get(), MPFR_RNDD);
    mpfr_sub(r.v_.get(), ax, e.v_.get(), MPFR_RNDD);
    mpfr_clear(ax);
    if (mpfr_sgn(r.v_.get()) <= 0) {
      throw PrecisionError(std::string(what) + ": operand not bounded away from zero");
    }
    return r;
  }

  friend Err operator+(const Err& a, const Err& b) {
    Err r;
    mpfr_add(r.v_.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
    return r;
  }
  friend Err operator*(const Err& a, const Err& b) {
    Err r;
    mpfr_mul(r.v_.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
    return r;
  }
  /// Upper bound of a/b when b is a lower bound of the true denominator.
  friend Err operator/(const Err& a, const Err& b) {
    Err r;
    mpfr_div(r.v_.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
    return r;
  }
  Err& operator+=(const Err& o) { return *this = *this + o; }

  friend bool operator<(const Err& a, const Err& b) { return mpfr_less_p(a.v_.get(), b.v_.get()) != 0; }
  friend bool operator<=(const Err& a, const Err& b) { return mpfr_lessequal_p(a.v_.get(), b.v_.get()) != 0; }

  static Err max(const Err& a, const Err& b) { return a < b ? b : a; }

  /// e^a - 1, rounded up.
  Err expm1() const {
    Err r;
    mpfr_expm1(r.v_.get(), v_.get(), MPFR_RNDU);
    return r;
  }
  /// a^n, rounded up.
  Err pow(unsigned long n) const {
    Err r;
    mpfr_pow_ui(r.v_.get(), v_.get(), n, MPFR_RNDU);
    return r;
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_finite() const { return mpfr_number_p(v_.get()) != 0; }
  double to_double() const { return mpfr_get_d(v_.get(), MPFR_RNDU); }
  const Real& real() const { return v_; }
  std::string str() const { return v_.sci(3); }

  static Err infinity() {
    Err r;
    mpfr_set_inf(r.v_.get(), 1);
    return r;
  }

 private:
  Real v_;
};

}  // namespace eisrec
