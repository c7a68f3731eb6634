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

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "eisrec/errors.hpp"
#include "eisrec/zeros.hpp"

using eisrec::Rational;
using eisrec::Weight;

namespace {

using cd = std::complex<double>;

// e^{ikt/2} E_k(e^{it}) in double precision; real on the arc.
double arc_oracle(int k, double t) {
  const auto s = eisrec::eisenstein_series(Weight(k), 40);
  const cd z = std::polar(1.0, t);
  const cd q = std::exp(cd(0, 2 * M_PI) * z);
  cd acc = 0;
  for (int n = 40; n >= 0; --n) acc = acc * q + s[n].get_d();
  return (std::exp(cd(0, k * t / 2.0)) * acc).real();
}

// Interior zeros as arguments in (pi/3, pi/2), by dense sampling and bisection.
std::vector<double> oracle_interior_zeros(int k) {
  std::vector<double> out;
  const int M = 3000;
  const double a = M_PI / 2, b = 2 * M_PI / 3;
  double tp = a + 1e-7;
  double prev = arc_oracle(k, tp);
  for (int j = 1; j < M; ++j) {
    const double t = a + (b - a) * j / M;
    const double v = arc_oracle(k, t);
    if ((v > 0) != (prev > 0)) {
      double lo = tp, hi = t;
      const bool slo = prev > 0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((arc_oracle(k, mid) > 0) == slo) lo = mid; else hi = mid;
      }
      out.push_back(M_PI - 0.5 * (lo + hi));
    }
    prev = v;
    tp = t;
  }
  return out;
}

}  // namespace

TEST(Arc, FunctionIsReal) {
  const auto t = eisrec::BigReal::from_rational(Rational(17, 10), 128);
  const auto v = eisrec::arc_function(Weight(12), t);
  EXPECT_EQ(v.imag.certain_sign(), 0);
  EXPECT_NEAR(v.value.to_double(), arc_oracle(12, 1.7), 1e-9);
}

TEST(Arc, RejectsSmallWeight) {
  EXPECT_THROW(eisrec::ArcEvaluator(Weight(2), 64), eisrec::DomainError);
  EXPECT_THROW(eisrec::find_arc_zeros(Weight(2)), eisrec::DomainError);
}

TEST(Census, CaseList) {
  auto c = eisrec::census(Weight(4));
  EXPECT_EQ(c.at_rho, 1);
  c = eisrec::census(Weight(6));
  EXPECT_EQ(c.at_i, 1);
  c = eisrec::census(Weight(8));
  EXPECT_EQ(c.at_rho, 2);
  c = eisrec::census(Weight(14));
  EXPECT_EQ(c.at_i, 1);
  EXPECT_EQ(c.at_rho, 2);
  c = eisrec::census(Weight(26));
  EXPECT_EQ(c.interior, 1);
  EXPECT_EQ(c.at_i, 1);
  EXPECT_EQ(c.at_rho, 2);
}

TEST(Census, ValenceFormula) {
  // interior + (at i)/2 + (at rho)/3 = k/12
  for (int k = 4; k <= 200; k += 2) {
    const auto c = eisrec::census(Weight(k));
    Rational lhs = Rational(c.interior) + Rational(c.at_i) / 2 + Rational(c.at_rho) / 3;
    EXPECT_EQ(lhs, Rational(k) / 12) << "k = " << k;
  }
}

TEST(Zeros, Z16) {
  const auto z = eisrec::largest_imag_zero(Weight(16));
  EXPECT_NEAR(z.z.re().to_double(), 0.196527, 5e-7);
  EXPECT_NEAR(z.z.im().to_double(), 0.980498, 5e-7);
  EXPECT_TRUE(z.simple_certified);
  EXPECT_FALSE(z.boundary);
  EXPECT_TRUE(z.theta.err() < eisrec::Err::pow2(-60));
}

TEST(Zeros, Z12HighPrecision) {
  const auto z = eisrec::largest_imag_zero(Weight(12), 300);
  EXPECT_NEAR(z.z.re().to_double(), 0.25133499, 1e-8);
  EXPECT_TRUE(z.theta.err() < eisrec::Err::pow2(-290));
  // |z| = 1 to working precision
  EXPECT_EQ((abs(z.z) - eisrec::BigReal::exact(1, z.z.prec())).certain_sign(), 0);
}

TEST(Zeros, MatchDoubleOracle) {
  for (int k : {12, 24, 36, 40}) {
    const auto zs = eisrec::find_arc_zeros(Weight(k));
    const auto oracle = oracle_interior_zeros(k);
    std::vector<double> interior;
    for (const auto& z : zs)
      if (!z.boundary) interior.push_back(z.theta.to_double());
    ASSERT_EQ(interior.size(), oracle.size()) << "k = " << k;
    // library orders from i towards rho: decreasing argument
    std::vector<double> sorted = oracle;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t i = 0; i < interior.size(); ++i) EXPECT_NEAR(interior[i], sorted[i], 1e-9) << "k = " << k;
  }
}

TEST(Zeros, BoundaryWeights) {
  const auto z6 = eisrec::largest_imag_zero(Weight(6));
  EXPECT_TRUE(z6.boundary);
  EXPECT_NEAR(z6.z.im().to_double(), 1.0, 1e-15);
  const auto z4 = eisrec::largest_imag_zero(Weight(4));
  EXPECT_NEAR(z4.z.re().to_double(), 0.5, 1e-15);
  EXPECT_EQ(eisrec::largest_imag_zero(Weight(8)).multiplicity, 2);
  const auto all14 = eisrec::find_arc_zeros(Weight(14));
  ASSERT_EQ(all14.size(), 2u);
  EXPECT_EQ(all14.back().multiplicity, 2);
}

TEST(Zeros, CountsAgreeWithCensus) {
  for (int k = 4; k <= 60; k += 2) {
    const auto zs = eisrec::find_arc_zeros(Weight(k));
    int interior = 0;
    for (const auto& z : zs) {
      if (!z.boundary) {
        ++interior;
        EXPECT_TRUE(z.simple_certified) << "k = " << k;
      }
    }
    EXPECT_EQ(interior, eisrec::census(Weight(k)).interior) << "k = " << k;
  }
}

TEST(Zeros, PhiInterval) {
  for (int k : {12, 16, 48, 100}) {
    const auto r = eisrec::phi_interval_check(Weight(k));
    EXPECT_TRUE(r.pass) << "k = " << k;
  }
  EXPECT_NEAR(eisrec::phi_interval_check(Weight(16)).phi.to_double(), 0.8741, 1e-3);
  EXPECT_THROW(eisrec::phi_interval_check(Weight(14)), eisrec::DomainError);
}

TEST(Zeros, ThetaAtZeroIsNonzero) {
  const auto z = eisrec::largest_imag_zero(Weight(20));
  EXPECT_TRUE(abs(z.theta_Ek).certain_sign() > 0);
}

TEST(Zeros, JsonFields) {
  const auto j = eisrec::to_json(eisrec::largest_imag_zero(Weight(16)));
  for (const char* key : {"k", "theta", "x", "y", "multiplicity", "q_re", "q_im", "theta_Ek_re", "theta_Ek_im"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("k").get<int>(), 16);
}
