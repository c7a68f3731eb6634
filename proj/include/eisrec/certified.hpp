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

// Arbitrary-precision reals and complexes carrying a certified absolute error
// bound. Every operation propagates the operands' bounds forward and adds the
// rounding error of its own result, so `err()` always encloses the distance
// to the exact value of the expression that was evaluated.

#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "eisrec/qseries.hpp"
#include "eisrec/real.hpp"

namespace eisrec {

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = 128) : val_(prec) {}
  BigReal(Real value, Err err) : val_(std::move(value)), err_(std::move(err)) {}

  static BigReal exact(long v, mpfr_prec_t prec) { return BigReal(Real(v, prec), Err()); }

  static BigReal from_rational(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    const int t = mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    Err e = t ? Err::ulp(r) : Err();
    return BigReal(std::move(r), std::move(e));
  }

  static BigReal from_integer(const Integer& z, mpfr_prec_t prec) {
    Real r(prec);
    const int t = mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
    Err e = t ? Err::ulp(r) : Err();
    return BigReal(std::move(r), std::move(e));
  }

  /// Decimal literal carrying its own stated uncertainty.
  static BigReal from_decimal(const std::string& s, mpfr_prec_t prec, const Err& stated) {
    Real r(prec);
    if (mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN) != 0) {
      throw DomainError("not a decimal literal: '" + s + "'");
    }
    Err e = stated + Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  static BigReal pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    Err e = Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  const Real& value() const { return val_; }
  const Err& err() const { return err_; }
  mpfr_prec_t prec() const { return val_.prec(); }

  /// +1 or -1 when the enclosure excludes zero, else 0.
  int certain_sign() const {
    if (mpfr_cmpabs(val_.get(), err_.real().get()) <= 0) return 0;
    return val_.sign();
  }

  /// Upper bound of |x|.
  Err abs_upper() const { return Err::abs_of(val_) + err_; }

  BigReal with_added_err(const Err& extra) const { return BigReal(val_, err_ + extra); }

  /// The same value re-rounded to a different working precision.
  BigReal at_prec(mpfr_prec_t prec) const {
    Real r(prec);
    const int t = mpfr_set(r.get(), val_.get(), MPFR_RNDN);
    Err e = err_;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  double to_double() const { return val_.to_double(); }

  friend BigReal operator-(const BigReal& a) {
    Real r(a.prec());
    mpfr_neg(r.get(), a.val_.get(), MPFR_RNDN);
    return BigReal(std::move(r), a.err_);
  }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    Real r(std::max(a.prec(), b.prec()));
    const int t = mpfr_add(r.get(), a.val_.get(), b.val_.get(), MPFR_RNDN);
    Err e = a.err_ + b.err_;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    Real r(std::max(a.prec(), b.prec()));
    const int t = mpfr_sub(r.get(), a.val_.get(), b.val_.get(), MPFR_RNDN);
    Err e = a.err_ + b.err_;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    Real r(std::max(a.prec(), b.prec()));
    const int t = mpfr_mul(r.get(), a.val_.get(), b.val_.get(), MPFR_RNDN);
    Err e = Err::abs_of(a.val_) * b.err_ + Err::abs_of(b.val_) * a.err_ + a.err_ * b.err_;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    const Err denom = Err::gap_below(b.val_, b.err_, "division");
    Real r(std::max(a.prec(), b.prec()));
    const int t = mpfr_div(r.get(), a.val_.get(), b.val_.get(), MPFR_RNDN);
    const Err quotient = Err::abs_of(r) + Err::ulp(r);
    Err e = (a.err_ + quotient * b.err_) / denom;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }

  friend BigReal sqrt(const BigReal& x) {
    if (x.certain_sign() <= 0) throw PrecisionError("sqrt: argument not certainly positive");
    Real r(x.prec());
    const int t = mpfr_sqrt(r.get(), x.val_.get(), MPFR_RNDN);
    // |sqrt(x) - sqrt(x~)| <= e / sqrt(x~)
    const Err root_low = Err::gap_below(r, Err::ulp(r), "sqrt");
    Err e = x.err_ / root_low;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal exp(const BigReal& x) {
    Real r(x.prec());
    const int t = mpfr_exp(r.get(), x.val_.get(), MPFR_RNDN);
    // |exp(x) - exp(x~)| <= exp(x~) (e^err - 1)
    Err e = (Err::abs_of(r) + Err::ulp(r)) * x.err_.expm1();
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal cos(const BigReal& x) {
    Real r(x.prec());
    const int t = mpfr_cos(r.get(), x.val_.get(), MPFR_RNDN);
    Err e = x.err_;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal sin(const BigReal& x) {
    Real r(x.prec());
    const int t = mpfr_sin(r.get(), x.val_.get(), MPFR_RNDN);
    Err e = x.err_;
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  friend BigReal abs(const BigReal& x) {
    Real r(x.prec());
    mpfr_abs(r.get(), x.val_.get(), MPFR_RNDN);
    return BigReal(std::move(r), x.err_);
  }

 private:
  Real val_;
  Err err_;
};

/// x^n by binary exponentiation.
inline BigReal pow(const BigReal& x, unsigned long n) {
  BigReal result = BigReal::exact(1, x.prec());
  BigReal base = x;
  while (n > 0) {
    if (n & 1ul) result *= base;
    n >>= 1ul;
    if (n > 0) base *= base;
  }
  return result;
}

/// True when a < b holds for every value in both enclosures.
inline bool certainly_less(const BigReal& a, const BigReal& b) { return (b - a).certain_sign() > 0; }

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}

  static BigComplex real(BigReal re) {
    const auto p = re.prec();
    return BigComplex(std::move(re), BigReal(p));
  }

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  /// Larger of the two component bounds.
  Err err() const { return Err::max(re_.err(), im_.err()); }

  BigComplex conj() const { return BigComplex(re_, -im_); }

  BigComplex with_added_err(const Err& extra) const {
    return BigComplex(re_.with_added_err(extra), im_.with_added_err(extra));
  }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re_, -a.im_); }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& b) { return BigComplex(s * b.re_, s * b.im_); }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigReal n = b.re_ * b.re_ + b.im_ * b.im_;
    const BigComplex num = a * b.conj();
    return BigComplex(num.re_ / n, num.im_ / n);
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }

  /// |z| with ||z| - |z~|| <= err(re) + err(im).
  friend BigReal abs(const BigComplex& z) {
    Real r(z.prec());
    const int t = mpfr_hypot(r.get(), z.re_.value().get(), z.im_.value().get(), MPFR_RNDN);
    Err e = z.re_.err() + z.im_.err();
    if (t) e += Err::ulp(r);
    return BigReal(std::move(r), std::move(e));
  }

  /// Upper bound of |z|.
  Err abs_upper() const { return abs(*this).abs_upper(); }

 private:
  BigReal re_;
  BigReal im_;
};

inline BigComplex pow(const BigComplex& z, unsigned long n) {
  BigComplex result = BigComplex::real(BigReal::exact(1, z.prec()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1ul) result *= base;
    n >>= 1ul;
    if (n > 0) base *= base;
  }
  return result;
}

/// r (cos t + i sin t).
inline BigComplex polar(const BigReal& r, const BigReal& t) { return BigComplex(r * cos(t), r * sin(t)); }

/// q = exp(2 pi i z) for z = x + i y.
inline BigComplex q_of_z(const BigComplex& z) {
  const auto two_pi = BigReal::exact(2, z.prec()) * BigReal::pi(z.prec());
  return polar(exp(-(two_pi * z.im())), two_pi * z.re());
}

}  // namespace eisrec
