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

#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "eisrec/errors.hpp"
#include "eisrec/qseries.hpp"

namespace eisrec {

/// Even weight k >= 2. k = 2 is quasi-modular and only admitted where the
/// caller explicitly allows it.
class Weight {
 public:
  explicit Weight(int k) : k_(k) {
    if (k < 2 || k % 2 != 0) {
      throw DomainError("weight must be an even integer >= 2, got " + std::to_string(k));
    }
  }
  int value() const { return k_; }
  bool quasi_modular() const { return k_ == 2; }
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  int k_;
};

/// k = 12 N + s with s in {0, 4, 6, 8, 10, 14}, for even k >= 4.
struct WeightSplit {
  int N;
  int s;
};

inline WeightSplit split_weight(Weight k) {
  const int w = k.value();
  if (w < 4) throw DomainError("split_weight: weight must be >= 4");
  int s = w % 12;
  if (s == 2) s = 14;
  return {(w - s) / 12, s};
}

/// 2k / B_k.
inline Rational eisenstein_scale(Weight k) {
  Rational x0 = Rational(2 * k.value()) / bernoulli(k.value());
  x0.canonicalize();
  return x0;
}

/// epsilon_k(n) = (2k/B_k) sigma_{k-1}(n), the negated n-th coefficient of E_k.
inline Rational epsilon(Weight k, std::uint64_t n) {
  if (n == 0) throw DomainError("epsilon: n must be positive");
  return eisenstein_scale(k) * Rational(sigma(static_cast<unsigned>(k.value() - 1), n));
}

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n through q^N.
inline RationalSeries eisenstein_series(Weight k, std::size_t N) {
  const Rational x0 = eisenstein_scale(k);
  const auto sig = sigma_table(static_cast<unsigned>(k.value() - 1), N);
  std::vector<Rational> c(N + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) c[n] = -x0 * Rational(sig[n]);
  return RationalSeries(std::move(c));
}

struct IdentityCheck {
  std::string name;
  bool pass;
  long first_mismatch;  // -1 when pass
};

struct IdentityReport {
  std::size_t order;
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline IdentityCheck check_identity(std::string name, const RationalSeries& lhs, const RationalSeries& rhs) {
  const long m = first_mismatch(lhs, rhs);
  return {std::move(name), m < 0, m};
}

/// E_8 = E_4^2, E_10 = E_4 E_6, E_14 = E_4^2 E_6 through order N. The E_8
/// argument lets tests inject a perturbed series.
inline IdentityReport verify_identities(std::size_t N, const RationalSeries* e8_override = nullptr) {
  const auto e4 = eisenstein_series(Weight(4), N);
  const auto e6 = eisenstein_series(Weight(6), N);
  const auto e8 = e8_override ? *e8_override : eisenstein_series(Weight(8), N);
  const auto e4sq = multiply(e4, e4);
  IdentityReport report{N, {}};
  report.checks.push_back(check_identity("E8 = E4^2", e8, e4sq));
  report.checks.push_back(check_identity("E10 = E4*E6", eisenstein_series(Weight(10), N), multiply(e4, e6)));
  report.checks.push_back(check_identity("E14 = E4^2*E6", eisenstein_series(Weight(14), N), multiply(e4sq, e6)));
  return report;
}

/// Theta(E_4) = (E_4 E_2 - E_6)/3 and Theta(E_6) = (E_6 E_2 - E_8)/2.
inline IdentityReport verify_theta_identities(std::size_t N) {
  const auto e2 = eisenstein_series(Weight(2), N);
  const auto e4 = eisenstein_series(Weight(4), N);
  const auto e6 = eisenstein_series(Weight(6), N);
  const auto e8 = eisenstein_series(Weight(8), N);
  IdentityReport report{N, {}};
  report.checks.push_back(
      check_identity("Theta(E4) = (E4*E2 - E6)/3", theta(e4), Rational(1, 3) * (multiply(e4, e2) - e6)));
  report.checks.push_back(
      check_identity("Theta(E6) = (E6*E2 - E8)/2", theta(e6), Rational(1, 2) * (multiply(e6, e2) - e8)));
  return report;
}

}  // namespace eisrec
