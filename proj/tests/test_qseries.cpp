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

#include <cstdint>
#include <vector>

#include "eisrec/errors.hpp"
#include "eisrec/qseries.hpp"

namespace {

using eisrec::Integer;
using eisrec::Rational;
using eisrec::RationalSeries;

// Akiyama-Tanigawa; yields B_1 = +1/2, irrelevant for even indices.
Rational bernoulli_oracle(int n) {
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

Integer sigma_oracle(unsigned ell, std::uint64_t n) {
  Integer s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    Integer p = 1;
    for (unsigned i = 0; i < ell; ++i) p *= static_cast<unsigned long>(d);
    s += p;
  }
  return s;
}

// Long division 1/s term by term in plain rational arithmetic.
std::vector<Rational> reciprocal_oracle(const std::vector<Rational>& s) {
  std::vector<Rational> r(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= n; ++j) acc -= s[j] * r[n - j];
    r[n] = acc / s[0];
  }
  return r;
}

std::vector<Rational> sample_coeffs() {
  return {Rational(3, 2), Rational(-7, 5), Rational(2), Rational(0), Rational(11, 13), Rational(-1, 3), Rational(5)};
}

}  // namespace

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(eisrec::bernoulli(0), Rational(1));
  EXPECT_EQ(eisrec::bernoulli(2), Rational(1, 6));
  EXPECT_EQ(eisrec::bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(eisrec::bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(eisrec::bernoulli(16), Rational(-3617, 510));
}

TEST(Bernoulli, MatchesIndependentAlgorithm) {
  for (int k = 0; k <= 60; k += 2) EXPECT_EQ(eisrec::bernoulli(k), bernoulli_oracle(k)) << "k = " << k;
}

TEST(Bernoulli, RejectsOddAndNegative) {
  EXPECT_THROW(eisrec::bernoulli(3), eisrec::DomainError);
  EXPECT_THROW(eisrec::bernoulli(-2), eisrec::DomainError);
}

TEST(Sigma, MatchesDivisorEnumeration) {
  for (unsigned ell : {1u, 3u, 5u, 11u}) {
    for (std::uint64_t n = 1; n <= 60; ++n) EXPECT_EQ(eisrec::sigma(ell, n), sigma_oracle(ell, n));
  }
}

TEST(Sigma, Multiplicative) {
  const std::uint64_t pairs[][2] = {{4, 9}, {7, 10}, {8, 27}, {25, 12}};
  for (auto [m, n] : pairs) {
    EXPECT_EQ(eisrec::sigma(7, m * n), eisrec::sigma(7, m) * eisrec::sigma(7, n));
  }
}

TEST(Sigma, TableMatchesPointwise) {
  const auto t = eisrec::sigma_table(3, 200);
  for (std::uint64_t n = 1; n <= 200; ++n) EXPECT_EQ(t[n], eisrec::sigma(3, n));
}

TEST(Sigma, RejectsZero) {
  EXPECT_THROW(eisrec::sigma(3, 0), eisrec::DomainError);
  EXPECT_THROW(eisrec::sigma(0, 5), eisrec::DomainError);
}

TEST(RationalSeries, DefaultIsOne) {
  RationalSeries s;
  EXPECT_EQ(s.order(), 0u);
  EXPECT_EQ(s[0], Rational(1));
}

TEST(RationalSeries, ReciprocalMatchesLongDivision) {
  const auto c = sample_coeffs();
  const auto r = eisrec::reciprocal(RationalSeries(c));
  const auto oracle = reciprocal_oracle(c);
  for (std::size_t n = 0; n < c.size(); ++n) EXPECT_EQ(r[n], oracle[n]) << "n = " << n;
}

TEST(RationalSeries, ReciprocalTimesSelfIsOne) {
  const RationalSeries s(sample_coeffs());
  const auto p = eisrec::multiply(s, eisrec::reciprocal(s));
  EXPECT_EQ(p, RationalSeries::constant(Rational(1), s.order()));
}

TEST(RationalSeries, ReciprocalOfNonInvertible) {
  const RationalSeries s(std::vector<Rational>{0, 1, 2});
  EXPECT_THROW(eisrec::reciprocal(s), eisrec::NonInvertibleError);
}

TEST(RationalSeries, PowerMatchesRepeatedProduct) {
  const RationalSeries s(sample_coeffs());
  const auto cube = eisrec::multiply(eisrec::multiply(s, s), s);
  EXPECT_EQ(eisrec::power(s, 3), cube);
  EXPECT_EQ(eisrec::power(s, 0), RationalSeries::constant(Rational(1), s.order()));
}

TEST(RationalSeries, MixedOrdersTruncateToMinimum) {
  const RationalSeries a(std::vector<Rational>{1, 2, 3, 4});
  const RationalSeries b(std::vector<Rational>{1, 1});
  EXPECT_EQ((a + b).order(), 1u);
  EXPECT_EQ(eisrec::multiply(a, b).order(), 1u);
  EXPECT_EQ(eisrec::multiply(a, b)[1], Rational(3));
}

TEST(RationalSeries, ThetaScalesByIndex) {
  const RationalSeries s(sample_coeffs());
  const auto t = eisrec::theta(s);
  for (std::size_t n = 0; n <= s.order(); ++n) EXPECT_EQ(t[n], Rational(static_cast<long>(n)) * s[n]);
}

TEST(RationalSeries, ThetaIsDerivation) {
  const RationalSeries a(sample_coeffs());
  const RationalSeries b(std::vector<Rational>{2, 0, Rational(1, 7), -3, 1, 1, Rational(9, 4)});
  const auto lhs = eisrec::theta(eisrec::multiply(a, b));
  const auto rhs = eisrec::multiply(eisrec::theta(a), b) + eisrec::multiply(a, eisrec::theta(b));
  EXPECT_EQ(lhs, rhs);
}

TEST(RationalSeries, FirstMismatch) {
  const RationalSeries a(std::vector<Rational>{1, 2, 3});
  const RationalSeries b(std::vector<Rational>{1, 2, 4});
  EXPECT_EQ(eisrec::first_mismatch(a, a), -1);
  EXPECT_EQ(eisrec::first_mismatch(a, b), 2);
}

TEST(RationalSeries, JsonRoundTrip) {
  const RationalSeries s(sample_coeffs());
  const nlohmann::json j = s;
  EXPECT_EQ(j.at("truncation_order").get<std::size_t>(), s.order());
  EXPECT_EQ(j.at("coeffs")[0].get<std::string>(), "3/2");
  EXPECT_EQ(j.get<RationalSeries>(), s);
}

TEST(RationalSeries, JsonRejectsLengthMismatch) {
  const nlohmann::json j = {{"truncation_order", 3}, {"coeffs", {"1", "2"}}};
  EXPECT_THROW(j.get<RationalSeries>(), eisrec::DomainError);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(eisrec::parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(eisrec::format_rational(Rational(270648)), "270648");
  EXPECT_THROW(eisrec::parse_rational("abc"), eisrec::DomainError);
}
