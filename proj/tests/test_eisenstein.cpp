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

#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"

using eisrec::Rational;
using eisrec::Weight;

TEST(Weight, RejectsOddAndSmall) {
  EXPECT_THROW(Weight(3), eisrec::DomainError);
  EXPECT_THROW(Weight(0), eisrec::DomainError);
  EXPECT_NO_THROW(Weight(2));
  EXPECT_TRUE(Weight(2).quasi_modular());
  EXPECT_FALSE(Weight(4).quasi_modular());
}

TEST(Weight, Split) {
  EXPECT_EQ(eisrec::split_weight(Weight(4)).s, 4);
  EXPECT_EQ(eisrec::split_weight(Weight(12)).N, 1);
  EXPECT_EQ(eisrec::split_weight(Weight(12)).s, 0);
  const auto w14 = eisrec::split_weight(Weight(14));
  EXPECT_EQ(w14.N, 0);
  EXPECT_EQ(w14.s, 14);
  const auto w26 = eisrec::split_weight(Weight(26));
  EXPECT_EQ(w26.N, 1);
  EXPECT_EQ(w26.s, 14);
  EXPECT_THROW(eisrec::split_weight(Weight(2)), eisrec::DomainError);
}

TEST(Eisenstein, Scale) {
  EXPECT_EQ(eisrec::eisenstein_scale(Weight(2)), Rational(24));
  EXPECT_EQ(eisrec::eisenstein_scale(Weight(4)), Rational(-240));
  EXPECT_EQ(eisrec::eisenstein_scale(Weight(6)), Rational(504));
  EXPECT_EQ(eisrec::eisenstein_scale(Weight(12)), Rational(-65520, 691));
}

TEST(Eisenstein, LeadingCoefficients) {
  const auto e4 = eisrec::eisenstein_series(Weight(4), 4);
  EXPECT_EQ(e4[0], Rational(1));
  EXPECT_EQ(e4[1], Rational(240));
  EXPECT_EQ(e4[2], Rational(2160));
  EXPECT_EQ(e4[3], Rational(6720));
  const auto e6 = eisrec::eisenstein_series(Weight(6), 2);
  EXPECT_EQ(e6[1], Rational(-504));
  EXPECT_EQ(e6[2], Rational(-16632));
  const auto e2 = eisrec::eisenstein_series(Weight(2), 2);
  EXPECT_EQ(e2[1], Rational(-24));
  EXPECT_EQ(e2[2], Rational(-72));
}

TEST(Eisenstein, EpsilonIsNegatedCoefficient) {
  const auto e10 = eisrec::eisenstein_series(Weight(10), 12);
  for (std::uint64_t n = 1; n <= 12; ++n) EXPECT_EQ(e10[n], -eisrec::epsilon(Weight(10), n));
}

TEST(Identities, ProductIdentitiesHold) {
  const auto rep = eisrec::verify_identities(120);
  ASSERT_EQ(rep.checks.size(), 3u);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Identities, ThetaIdentitiesHold) {
  const auto rep = eisrec::verify_theta_identities(120);
  ASSERT_EQ(rep.checks.size(), 2u);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Identities, DetectsPerturbation) {
  auto e8 = eisrec::eisenstein_series(Weight(8), 40);
  std::vector<Rational> c(e8.coeffs().begin(), e8.coeffs().end());
  c[17] += 1;
  const eisrec::RationalSeries bad(c);
  const auto rep = eisrec::verify_identities(40, &bad);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.checks[0].first_mismatch, 17);
  EXPECT_TRUE(rep.checks[1].pass);
}
