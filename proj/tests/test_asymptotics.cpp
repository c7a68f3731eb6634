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

#include "eisrec/asymptotics.hpp"
#include "eisrec/errors.hpp"

using eisrec::BigReal;
using eisrec::Rational;
using eisrec::Weight;

TEST(BetaTable, SmallValues) {
  const auto t6 = eisrec::beta_table(Weight(6), 2);
  EXPECT_EQ(t6.betas, (std::vector<Rational>{1, 504, 270648}));
  const auto t4 = eisrec::beta_table(Weight(4), 2);
  EXPECT_EQ(t4.betas, (std::vector<Rational>{1, -240, 55440}));
  EXPECT_EQ(eisrec::beta_table(Weight(4), 1, 2).betas[1], Rational(-480));
  EXPECT_THROW(eisrec::beta_table(Weight(4), 3, 0), eisrec::DomainError);
}

TEST(BetaTable, PowerConsistency) {
  const auto a = eisrec::beta_table(Weight(4), 80, 2);
  const auto b = eisrec::beta_table(Weight(8), 80);
  EXPECT_EQ(a.betas, b.betas);
}

TEST(BetaTable, JsonRows) {
  const auto j = eisrec::to_json(eisrec::beta_table(Weight(6), 2));
  EXPECT_EQ(j.at("rows")[2].at("beta").get<std::string>(), "270648");
}

TEST(Ratios, ConvergeToPoles) {
  const auto r6 = eisrec::ratio_limit_check(Weight(6), 21);
  EXPECT_TRUE(r6.pass);
  EXPECT_EQ(r6.pole, "q_i");
  EXPECT_NEAR(r6.rows[20].ratio->to_double(), std::exp(-2 * M_PI), 1e-12);
  const auto r4 = eisrec::ratio_limit_check(Weight(4), 21);
  EXPECT_TRUE(r4.pass);
  EXPECT_NEAR(r4.rows[20].ratio->to_double(), -std::exp(-M_PI * std::sqrt(3.0)), 1e-12);
  // A triple pole: the quotients approach q_rho only like 1/n.
  const auto r43 = eisrec::ratio_limit_check(Weight(4), 200, 3, 1e-4);
  EXPECT_EQ(r43.pole, "q_rho");
  EXPECT_TRUE(r43.pass);
}

TEST(Ratios, DistanceDecreasesForSmallWeights) {
  for (int k : {4, 6}) {
    const auto r = eisrec::ratio_limit_check(Weight(k), 51, 1, 1e-8, 512);
    for (std::size_t n = 6; n <= 50; ++n) {
      EXPECT_TRUE(eisrec::certainly_less(*r.rows[n].distance, *r.rows[n - 1].distance)) << "k = " << k << " n = " << n;
    }
  }
}

TEST(Ratios, WeightEightDriftsSlowly) {
  const auto r = eisrec::ratio_limit_check(Weight(8), 22, 1, 1e-8);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.rows[21].ratio->value().sci(5), "-4.1443e-03");
}

TEST(Ratios, UnsupportedWeights) {
  EXPECT_THROW(eisrec::ratio_limit_check(Weight(12), 10), eisrec::DomainError);
  EXPECT_THROW(eisrec::ratio_limit_check(Weight(6), 10, 2), eisrec::DomainError);
}

TEST(CrossRatio, Rows) {
  const auto c = eisrec::cross_weight_ratio(Weight(6), Weight(10), 100);
  EXPECT_EQ(c.rows[0].ratio.value().fixed(30), "1.000000000000000000000000000000");
  EXPECT_EQ(c.rows[1].ratio.value().fixed(12), "1.909090909091");
  EXPECT_EQ(c.rows[100].ratio.value().fixed(30), "1.455762892268709322462422003599");
  EXPECT_GE(c.rows[100].digits, 28);
  EXPECT_GE(eisrec::cross_weight_ratio(Weight(10), Weight(14), 100).rows[100].digits, 28);
  EXPECT_THROW(eisrec::cross_weight_ratio(Weight(6), Weight(14), 5), eisrec::DomainError);
}

TEST(OnePole, PredictionsMatchCoefficients) {
  const BigReal r6 = eisrec::one_pole_ratio(Weight(6), 20);
  EXPECT_LT(std::fabs(r6.to_double() - 1), 1e-8);
  const BigReal r14 = eisrec::one_pole_ratio(Weight(14), 40);
  EXPECT_LT(std::fabs(r14.to_double() - 1), 1e-6);
  const BigReal r4 = eisrec::one_pole_ratio(Weight(4), 20);
  EXPECT_LT(std::fabs(r4.to_double() - 1), 1e-8);
  EXPECT_GT(eisrec::one_pole_asymptotic(Weight(4), 10).to_double(), 0);
  EXPECT_LT(eisrec::one_pole_asymptotic(Weight(4), 11).to_double(), 0);
  EXPECT_THROW(eisrec::one_pole_asymptotic(Weight(8), 3), eisrec::DomainError);
}

TEST(OnePole, LeadingTermIdentity) {
  for (int k : {4, 6}) {
    for (std::size_t n : {0u, 10u}) {
      const auto d = eisrec::hr_leading_term(Weight(k), n) - eisrec::one_pole_asymptotic(Weight(k), n);
      EXPECT_EQ(d.certain_sign(), 0) << "k = " << k << ", n = " << n;
    }
  }
  EXPECT_THROW(eisrec::hr_leading_term(Weight(10), 1), eisrec::DomainError);
}

TEST(Residuals, DecayForWeightTwelve) {
  const auto r = eisrec::residual_sequence(Weight(12), 120);
  EXPECT_TRUE(r.decay_pass);
  EXPECT_TRUE(r.bounded_pass);
  EXPECT_GE(r.precision_bits, static_cast<long>(120 * 2 * M_PI * 0.97 / std::log(2.0)) + 128);
  EXPECT_THROW(eisrec::residual_sequence(Weight(14), 50), eisrec::DomainError);
}

TEST(Subsequence, RatioApproachesOne) {
  const auto s = eisrec::subsequence_extract(Weight(16), 120);
  EXPECT_TRUE(s.pass);
  ASSERT_FALSE(s.picks.empty());
  for (std::size_t i = 1; i < s.picks.size(); ++i) EXPECT_GT(s.picks[i].n, s.picks[i - 1].n);
}

TEST(SignStats, Invariants) {
  const auto s = eisrec::sign_stats(Weight(24), 300);
  for (std::size_t n = 1; n <= 300; ++n) {
    EXPECT_GE(s.A[n], s.A[n - 1]);
    EXPECT_LE(s.B[n], n);
    EXPECT_LE(s.A[n], s.B[n] + 1);
  }
}

TEST(SignStats, AlternationForWeightFour) {
  const auto s = eisrec::sign_stats(Weight(4), 200);
  for (std::size_t n = 0; n <= 200; ++n) EXPECT_EQ(s.A[n], n);
}

TEST(SignStats, ZerosAreRemoved) {
  // 1, -1, 0, 0, 2, 0, -3 has sign changes at 1->-1, -1->2, 2->-3.
  eisrec::CoeffTable t{4, 1, {1, -1, 0, 0, 2, 0, -3}};
  const auto s = eisrec::sign_stats(t);
  EXPECT_EQ(s.A[6], 3u);
  EXPECT_EQ(s.B[6], 3u);
  EXPECT_EQ(s.A[3], 1u);
}

TEST(SignStats, DensityNearTwoX) {
  const auto s = eisrec::sign_stats(Weight(16), 1000);
  const double two_x = 2 * eisrec::largest_imag_zero(Weight(16)).z.re().to_double();
  EXPECT_NEAR(s.density(1000).get_d(), two_x, 0.01);
  EXPECT_EQ(s.B[1000], 1000u);
}

TEST(Density, TrendDecreases) {
  const auto d = eisrec::density_trend(6, 80);
  EXPECT_TRUE(d.pass);
  ASSERT_EQ(d.rows.size(), 4u);
  EXPECT_EQ(d.rows.front().ell, 3);
  EXPECT_THROW(eisrec::density_trend(3), eisrec::DomainError);
}

TEST(Integrality, Passes) {
  EXPECT_TRUE(eisrec::integrality_check(300).pass);
}
