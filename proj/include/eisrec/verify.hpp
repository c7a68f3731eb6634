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

// Named verification suites shared by the command-line tool and the
// acceptance runner.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eisrec/analytic.hpp"
#include "eisrec/asymptotics.hpp"
#include "eisrec/bounds.hpp"
#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"
#include "eisrec/tables.hpp"
#include "eisrec/zeros.hpp"

namespace eisrec {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}};
}

namespace detail {

inline std::string table_detail(const TableReport& t) {
  std::ostringstream os;
  os << t.cells_compared << " cells compared, " << t.mismatches.size() << " mismatches";
  for (const auto& m : t.mismatches) {
    os << "; n=" << m.row << " " << m.column << ": " << m.computed << " vs " << m.published;
  }
  return os.str();
}

}  // namespace detail

struct SuiteOptions {
  std::vector<int> weights;       // empty: suite default
  std::optional<std::size_t> n_max;
  AnalyticConfig config;
};

inline SuiteResult suite_identities(const SuiteOptions& o) {
  const std::size_t N = o.n_max.value_or(500);
  SuiteResult s{"identities", {}};
  for (const auto& rep : {verify_identities(N), verify_theta_identities(N)}) {
    for (const auto& c : rep.checks) {
      s.add(c.name + " through q^" + std::to_string(N), c.pass,
            c.pass ? "exact" : "first mismatch at n = " + std::to_string(c.first_mismatch));
    }
  }
  return s;
}

inline SuiteResult suite_sandwich(const SuiteOptions& o) {
  const std::size_t N = o.n_max.value_or(300);
  const std::vector<int> ks = o.weights.empty() ? std::vector<int>{2, 6, 10, 14} : o.weights;
  SuiteResult s{"sandwich", {}};
  for (int w : ks) {
    const Weight k(w);
    const auto sw = sandwich_check(k, N);
    s.add("alpha <= beta <= gamma, k = " + std::to_string(w) + ", n <= " + std::to_string(N), sw.pass,
          sw.pass ? "exact" : "violated at n = " + std::to_string(sw.first_violation));
    const auto dom = dominance_check(k, std::max<std::size_t>(N, 3));
    s.add("eps <= delta, k = " + std::to_string(w), dom.pass,
          dom.pass ? "exact" : "violated at n = " + std::to_string(dom.first_violation));
    const std::size_t nc = std::min<std::size_t>(N, 50);
    const auto lb = lower_bound(k, nc);
    const auto ub = upper_bound(k, nc);
    s.add("closed forms match recurrences, k = " + std::to_string(w) + ", n = " + std::to_string(nc),
          lb.agree && ub.agree);
    if (w == 6) {
      const auto p = bound_params(k);
      const bool ok = p.Delta == Rational(320544) && p.b == Surd21(Rational(16876, 33)) &&
                      p.D == Surd21(Rational(341015536, 1089));
      s.add("Delta_6 = 320544, b_6 = 16876/33, D_6 = 341015536/1089", ok,
            "Delta = " + format_rational(p.Delta) + ", b = " + p.b.str() + ", D = " + p.D.str());
      const auto t5 = table5();
      s.add("bounds table for beta_6, n = 1..9", t5.pass(), detail::table_detail(t5));
    }
  }
  bool bound_ok = true;
  for (unsigned ell = 5; ell <= 64; ++ell) bound_ok = bound_ok && power_ratio_bound_holds(ell);
  s.add("3^l + 1 > 2.98^l (1 + 2^-l), l = 5..64", bound_ok);
  return s;
}

inline SuiteResult suite_integrality(const SuiteOptions& o) {
  const std::size_t N = o.n_max.value_or(2000);
  SuiteResult s{"integrality", {}};
  try {
    integrality_check(N);
    s.add("(-1)^n beta_4(n) in 240 N, 1 <= n <= " + std::to_string(N), true, "exact");
  } catch (const IntegrityError& e) {
    s.add("(-1)^n beta_4(n) in 240 N, 1 <= n <= " + std::to_string(N), false, e.what());
  }
  return s;
}

inline SuiteResult suite_residuals(const SuiteOptions& o) {
  const std::size_t N = o.n_max.value_or(200);
  const std::vector<int> ks = o.weights.empty() ? std::vector<int>{12, 16} : o.weights;
  SuiteResult s{"residuals", {}};
  for (int w : ks) {
    const Weight k(w);
    const std::string tag = "k = " + std::to_string(w);
    const auto r = residual_sequence(k, N);
    s.add("residual decay, " + tag, r.decay_pass,
          "max trailing |r| <= " + r.trail_max_upper.str() + ", max leading |r| >= " + r.lead_max_lower.str());
    s.add("two-pole term bounded by 2|C|, " + tag, r.bounded_pass);
    const auto sub = subsequence_extract(k, N);
    std::string d = std::to_string(sub.picks.size()) + " picks, " + std::to_string(sub.skipped.size()) + " skipped";
    if (!sub.picks.empty()) {
      d += ", ratio at n = " + std::to_string(sub.picks.back().n) + " is " + sub.picks.back().ratio.value().sci(8);
    }
    s.add("subsequence ratio within 0.05 of 1, " + tag, sub.pass, d);
  }
  return s;
}

inline SuiteResult suite_ratios(const SuiteOptions& o) {
  const std::size_t N = o.n_max.value_or(21);
  SuiteResult s{"ratios", {}};
  for (int w : {4, 6}) {
    const auto r = ratio_limit_check(Weight(w), N);
    const auto& last = r.rows.back();
    s.add("beta_" + std::to_string(w) + "(n)/beta_" + std::to_string(w) + "(n+1) -> " + r.pole + " at n = " +
              std::to_string(last.n),
          r.pass, "distance " + last.distance->value().sci(4));
  }
  const auto t1 = table1();
  s.add("successive quotients, k in {4, 6, 12, 14}", t1.pass(), detail::table_detail(t1));
  const auto t2 = table2();
  s.add("successive quotients, k in {8, 10, 12, 14, 16}", t2.pass(), detail::table_detail(t2));

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(o.config.precision_bits);
  const auto t3 = table3(prec);
  s.add("beta_6(n)/beta_10(n) table", t3.pass(), detail::table_detail(t3));
  for (auto [a, b] : {std::pair{6, 10}, std::pair{10, 14}}) {
    const auto c = cross_weight_ratio(Weight(a), Weight(b), 100, prec);
    const int d = c.rows.back().digits;
    s.add("beta_" + std::to_string(a) + "(100)/beta_" + std::to_string(b) + "(100) ~ E4(q_i)", d >= 28,
          std::to_string(d) + " digits");
  }
  if (o.config.gamma_quarter) {
    const auto g = gamma_quarter_check(prec, o.config);
    s.add("E4(q_i) = 3 Gamma(1/4)^8 / (2 pi)^6", g.consistent && g.agreement_digits >= 28,
          std::to_string(g.agreement_digits) + " digits");
  }
  const BigReal one = BigReal::exact(1, 128);
  const BigReal dev = abs(one_pole_ratio(Weight(6), 20) - one);
  s.add("beta_6(20) / one-pole prediction within 1e-8 of 1", dev.to_double() < 1e-8, dev.value().sci(4));
  for (int w : {4, 6}) {
    const auto d = hr_leading_term(Weight(w), 10) - one_pole_asymptotic(Weight(w), 10);
    s.add("leading term identity, k = " + std::to_string(w) + ", n = 10", d.certain_sign() == 0);
  }
  return s;
}

inline SuiteResult suite_stats(const SuiteOptions& o) {
  const std::size_t N = o.n_max.value_or(1000);
  SuiteResult s{"stats", {}};
  const CoeffStats st16 = sign_stats(Weight(16), N);
  const ZeroRecord z16 = largest_imag_zero(Weight(16));
  const double two_x = 2.0 * z16.z.re().to_double();
  const double density = st16.density(N).get_d();
  s.add("A_16(n)/n within 0.01 of 2 x_16, n = " + std::to_string(N), std::fabs(density - two_x) < 0.01,
        "A/n = " + format_fixed(st16.density(N), 8) + ", 2x = " + std::to_string(two_x));
  if (N >= 1000) {
    const auto t4 = table4();
    s.add("sign change portions for k = 16", t4.pass(), detail::table_detail(t4));
  }
  for (int w : {12, 16, 20}) {
    const CoeffStats st = w == 16 ? st16 : sign_stats(Weight(w), N);
    s.add("B_" + std::to_string(w) + "(n) = n, n = " + std::to_string(N), st.B[N] == N,
          "B = " + std::to_string(st.B[N]));
  }
  const CoeffStats st4 = sign_stats(Weight(4), std::min<std::size_t>(N, 500));
  s.add("A_4(n) = n", st4.A.back() == st4.n_max);
  const auto d = density_trend(10, 200);
  s.add("2 x_{4l} at l = 10 below all earlier l", d.pass);
  return s;
}

inline SuiteResult suite_zeros(const SuiteOptions& o) {
  const int k_max = o.weights.empty() ? 100 : o.weights.front();
  SuiteResult s{"zeros", {}};
  bool census_ok = true;
  std::string bad;
  for (int w = 4; w <= k_max; w += 2) {
    std::vector<ZeroRecord> zs;
    try {
      zs = find_arc_zeros(Weight(w));
    } catch (const IntegrityError& e) {
      census_ok = false;
      bad += " k=" + std::to_string(w) + " (" + e.what() + ")";
      continue;
    }
    const Census c = census(Weight(w));
    int interior = 0, at_i = 0, at_rho = 0;
    for (const auto& z : zs) {
      if (!z.boundary) {
        ++interior;
      } else if (z.theta.to_double() > 1.5) {
        at_i += z.multiplicity;
      } else {
        at_rho += z.multiplicity;
      }
    }
    if (interior != c.interior || at_i != c.at_i || at_rho != c.at_rho) {
      census_ok = false;
      bad += " k=" + std::to_string(w);
    }
  }
  s.add("zero census, even k in [4, " + std::to_string(k_max) + "]", census_ok, bad);
  bool phi_ok = true;
  for (int w = 12; w <= k_max; w += 4) phi_ok = phi_ok && phi_interval_check(Weight(w)).pass;
  s.add("phi in ((N-1)/N, 1), k = 0 mod 4, 12 <= k <= " + std::to_string(k_max), phi_ok);
  const auto z = largest_imag_zero(Weight(16));
  const bool near = std::fabs(z.z.re().to_double() - 0.196527) < 5e-7 &&
                    std::fabs(z.z.im().to_double() - 0.980498) < 5e-7;
  s.add("z_16 = 0.196527 + 0.980498 i", near, z.z.re().value().fixed(8) + " + " + z.z.im().value().fixed(8) + " i");
  return s;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "sandwich", "integrality", "residuals",
                                                 "ratios",     "stats",    "zeros"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "identities") return suite_identities(o);
  if (name == "sandwich") return suite_sandwich(o);
  if (name == "integrality") return suite_integrality(o);
  if (name == "residuals") return suite_residuals(o);
  if (name == "ratios") return suite_ratios(o);
  if (name == "stats") return suite_stats(o);
  if (name == "zeros") return suite_zeros(o);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace eisrec
