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

#include <gtest/gtest.h>

#include <cmath>

#include "eisrec/certified.hpp"
#include "eisrec/quadratic.hpp"
#include "eisrec/real.hpp"

using eisrec::BigComplex;
using eisrec::BigReal;
using eisrec::Err;
using eisrec::Rational;

namespace {

// |x - reference| <= err(x), with the reference at much higher precision.
bool encloses(const BigReal& x, const BigReal& reference) {
  return (x - reference).certain_sign() == 0;
}

}  // namespace

TEST(Err, RoundsUpward) {
  const Err third = Err(1.0) / Err(3.0);
  EXPECT_GE(third.to_double() * 3.0, 1.0);
  EXPECT_TRUE(Err::pow2(-10) < Err(0.001));
  EXPECT_TRUE(Err().is_zero());
  EXPECT_FALSE(Err::infinity().is_finite());
}

TEST(BigReal, ExactRationalHasUlpError) {
  const BigReal x = BigReal::from_rational(Rational(1, 3), 64);
  EXPECT_FALSE(x.err().is_zero());
  EXPECT_TRUE(encloses(x, BigReal::from_rational(Rational(1, 3), 512)));
  EXPECT_TRUE(BigReal::from_rational(Rational(3, 4), 64).err().is_zero());
}

TEST(BigReal, ArithmeticEnclosures) {
  const BigReal a = BigReal::from_rational(Rational(2, 7), 80);
  const BigReal b = BigReal::from_rational(Rational(-5, 11), 80);
  const BigReal A = BigReal::from_rational(Rational(2, 7), 600);
  const BigReal B = BigReal::from_rational(Rational(-5, 11), 600);
  EXPECT_TRUE(encloses(a + b, A + B));
  EXPECT_TRUE(encloses(a - b, A - B));
  EXPECT_TRUE(encloses(a * b, A * B));
  EXPECT_TRUE(encloses(a / b, A / B));
  EXPECT_TRUE(encloses(sqrt(a), sqrt(A)));
  EXPECT_TRUE(encloses(exp(b), exp(B)));
  EXPECT_TRUE(encloses(cos(a), cos(A)));
  EXPECT_TRUE(encloses(sin(b), sin(B)));
  EXPECT_TRUE(encloses(pow(a, 17), pow(A, 17)));
}

TEST(BigReal, PiEnclosure) {
  EXPECT_TRUE(encloses(BigReal::pi(70), BigReal::pi(700)));
  EXPECT_NEAR(BigReal::pi(64).to_double(), M_PI, 1e-15);
}

TEST(BigReal, CertainSign) {
  const BigReal x = BigReal::exact(1, 64).with_added_err(Err(0.5));
  EXPECT_EQ(x.certain_sign(), 1);
  const BigReal y = BigReal::exact(1, 64).with_added_err(Err(2.0));
  EXPECT_EQ(y.certain_sign(), 0);
  EXPECT_TRUE(eisrec::certainly_less(BigReal::exact(1, 64), BigReal::exact(2, 64)));
}

TEST(BigReal, FromDecimalCarriesStatedError) {
  const BigReal x = BigReal::from_decimal("3.25", 64, Err(1e-10));
  EXPECT_DOUBLE_EQ(x.to_double(), 3.25);
  EXPECT_GE(x.err().to_double(), 1e-10);
}

TEST(BigComplex, MultiplicationAndPolar) {
  const auto p = 128;
  const BigReal t = BigReal::from_rational(Rational(3, 10), p);
  const BigComplex z = eisrec::polar(BigReal::exact(1, p), t);
  const BigComplex w = pow(z, 10);
  // z^10 = e^{3 i}
  EXPECT_TRUE(encloses(w.re(), cos(BigReal::exact(3, 600))));
  EXPECT_TRUE(encloses(w.im(), sin(BigReal::exact(3, 600))));
  EXPECT_TRUE(encloses(abs(z), BigReal::exact(1, 600)));
  const BigComplex inv = BigComplex::real(BigReal::exact(1, p)) / z;
  EXPECT_TRUE(encloses((inv * z).re(), BigReal::exact(1, 600)));
}

TEST(BigComplex, QOfI) {
  const auto p = 128;
  const BigComplex i(BigReal(p), BigReal::exact(1, p));
  const BigComplex q = eisrec::q_of_z(i);
  EXPECT_NEAR(q.re().to_double(), std::exp(-2 * M_PI), 1e-18);
  EXPECT_EQ(q.im().certain_sign(), 0);
}

TEST(Quadratic, ExactSign) {
  using S = eisrec::Surd21;
  EXPECT_EQ(S(Rational(0), Rational(1)).sign(), 1);
  // 458/100 < sqrt 21 < 459/100
  EXPECT_EQ(S(Rational(-458, 100), Rational(1)).sign(), 1);
  EXPECT_EQ(S(Rational(-459, 100), Rational(1)).sign(), -1);
  EXPECT_EQ(S(Rational(5), Rational(-1)).sign(), 1);
  EXPECT_EQ(S(Rational(0)).sign(), 0);
}

TEST(Quadratic, FieldArithmetic) {
  using S = eisrec::Surd21;
  const S r(Rational(0), Rational(1));
  EXPECT_EQ(r * r, S(Rational(21)));
  const S a(Rational(1, 2), Rational(-3, 7));
  const S b(Rational(2), Rational(5));
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  EXPECT_TRUE(a < b);
  const BigReal v = b.to_big_real(128);
  EXPECT_NEAR(v.to_double(), 2 + 5 * std::sqrt(21.0), 1e-12);
}
