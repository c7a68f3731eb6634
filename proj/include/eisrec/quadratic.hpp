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

#pragma once

#include <string>
#include <utility>

#include "eisrec/certified.hpp"
#include "eisrec/qseries.hpp"

namespace eisrec {

/// a + b sqrt(D) with rational a, b, for a fixed squarefree D > 1. Closed
/// under ring operations; signs and comparisons are decided exactly.
template <long D>
class QuadraticRational {
  static_assert(D > 1, "radicand must exceed 1");

 public:
  QuadraticRational() = default;
  QuadraticRational(Rational a) : a_(std::move(a)), b_(0) {}  // NOLINT: implicit from Q
  QuadraticRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const {
    const int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and D b^2 wins.
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(D) * b_ * b_;
    return lhs > rhs ? sa : sb;
  }

  friend QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadraticRational operator-(const QuadraticRational& x, const QuadraticRational& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadraticRational operator-(const QuadraticRational& x) { return {-x.a_, -x.b_}; }
  friend QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y) {
    return {x.a_ * y.a_ + Rational(D) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  QuadraticRational& operator+=(const QuadraticRational& o) { return *this = *this + o; }
  QuadraticRational& operator*=(const QuadraticRational& o) { return *this = *this * o; }

  friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadraticRational& x, const QuadraticRational& y) { return (y - x).sign() > 0; }
  friend bool operator<=(const QuadraticRational& x, const QuadraticRational& y) { return (y - x).sign() >= 0; }

  BigReal to_big_real(mpfr_prec_t prec) const {
    BigReal r = BigReal::from_rational(a_, prec);
    if (!is_rational()) r += BigReal::from_rational(b_, prec) * sqrt(BigReal::exact(D, prec));
    return r;
  }

  std::string str() const {
    if (is_rational()) return format_rational(a_);
    return format_rational(a_) + " + " + format_rational(b_) + "*sqrt(" + std::to_string(D) + ")";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Q(sqrt 21) holds sqrt(7/3) = sqrt(21)/3.
using Surd21 = QuadraticRational<21>;

}  // namespace eisrec
