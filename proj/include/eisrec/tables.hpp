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

// Regeneration of the published coefficient tables and comparison against
// their printed values.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eisrec/asymptotics.hpp"
#include "eisrec/bounds.hpp"
#include "eisrec/certified.hpp"
#include "eisrec/errors.hpp"
#include "eisrec/qseries.hpp"

namespace eisrec {

namespace golden {

struct Row {
  const char* n;
  std::vector<const char*> cells;
};

inline const std::vector<Row>& table1() {
  static const std::vector<Row> rows = {
      {"1", {"-4.3290e-03", "1.8622e-03", "5.1172e-04", "1.2170e-04"}},
      {"2", {"-4.3333e-03", "1.8677e-03", "-9.6536e-03", "4.1330e-03"}},
      {"3", {"-4.3334e-03", "1.8674e-03", "5.4260e-04", "1.1240e-03"}},
      {"4", {"-4.3334e-03", "1.8674e-03", "-8.9832e-03", "2.3564e-03"}},
      {"5", {"-4.3334e-03", "1.8674e-03", "5.8359e-04", "1.6491e-03"}},
      {"6", {"-4.3334e-03", "1.8674e-03", "-8.3936e-03", "1.9821e-03"}},
      {"7", {"-4.3334e-03", "1.8674e-03", "6.2477e-04", "1.8133e-03"}},
      {"19", {"-4.3334e-03", "1.8674e-03", "8.8114e-04", "1.8674e-03"}},
      {"20", {"-4.3334e-03", "1.8674e-03", "-5.6773e-03", "1.8674e-03"}},
  };
  return rows;
}

inline const std::vector<Row>& table2() {
  static const std::vector<Row> rows = {
      {"17", {"-4.1044e-03", "1.8674e-03", "8.3715e-04", "1.8674e-03", "1.6465e-03"}},
      {"18", {"-4.1159e-03", "1.8674e-03", "-5.9626e-03", "1.8675e-03", "-1.7502e-02"}},
      {"19", {"-4.1263e-03", "1.8674e-03", "8.8114e-04", "1.8674e-03", "2.3584e-04"}},
      {"20", {"-4.1357e-03", "1.8674e-03", "-5.6773e-03", "1.8674e-03", "3.8543e-03"}},
      {"21", {"-4.1443e-03", "1.8674e-03", "9.2572e-04", "1.8674e-03", "-1.8095e-03"}},
  };
  return rows;
}

inline const std::vector<Row>& table3() {
  static const std::vector<Row> rows = {
      {"0", {"1.000000000000000000000000000000"}},
      {"1", {"1.909090909090909090909090909091"}},
      {"2", {"1.319410319410319410319410319410"}},
      {"3", {"1.523715744177431256188987060285"}},
      {"4", {"1.428309534304946335598514019013"}},
      {"80", {"1.455762892268709322462422003594"}},
      {"90", {"1.455762892268709322462422003599"}},
      {"100", {"1.455762892268709322462422003599"}},
  };
  return rows;
}

inline const std::vector<Row>& table4() {
  static const std::vector<Row> rows = {
      {"2", {"0.50000000", "0.40000000", "0.39500000"}},
      {"3", {"0.33333333", "0.40000000", "0.39333333"}},
      {"4", {"0.50000000", "0.40000000", "0.39250000"}},
      {"5", {"0.40000000", "0.40000000", "0.39400000"}},
      {"6", {"0.33333333", "0.40000000", "0.39333333"}},
      {"7", {"0.42857143", "0.40000000", "0.39285714"}},
      {"8", {"0.37500000", "0.40000000", "0.39375000"}},
      {"9", {"0.44444444", "0.38888889", "0.39333333"}},
      {"10", {"0.40000000", "0.39000000", "0.39300000"}},
  };
  return rows;
}

inline const std::vector<Row>& table5() {
  static const std::vector<Row> rows = {
      {"1", {"5.0400e+02", "5.0400e+02", "5.0400e+02", "5.0400e+02", "5.0400e+02"}},
      {"2", {"2.7060e+05", "2.7065e+05", "2.7065e+05", "2.7065e+05", "2.7065e+05"}},
      {"3", {"1.4474e+08", "1.4479e+08", "1.4491e+08", "1.4491e+08", "1.4491e+08"}},
      {"4", {"7.7438e+10", "7.7475e+10", "7.7600e+10", "7.7600e+10", "7.7602e+10"}},
      {"5", {"4.1429e+13", "4.1456e+13", "4.1554e+13", "4.1554e+13", "4.1556e+13"}},
      {"6", {"2.2165e+16", "2.2182e+16", "2.2252e+16", "2.2252e+16", "2.2253e+16"}},
      {"7", {"1.1858e+19", "1.1869e+19", "1.1916e+19", "1.1916e+19", "1.1917e+19"}},
      {"8", {"6.3441e+21", "6.3511e+21", "6.3807e+21", "6.3809e+21", "6.3813e+21"}},
      {"9", {"3.3941e+24", "3.3983e+24", "3.4168e+24", "3.4169e+24", "3.4172e+24"}},
  };
  return rows;
}

}  // namespace golden

/// 5 significant digits, "d.dddde+XX".
inline std::string format_sci5(const Rational& q) {
  Real r(192);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r.sci(5);
}

inline std::string format_sci5(const BigReal& x) { return x.value().sci(5); }

inline std::string format_fixed(const Rational& q, int decimals) {
  Real r(192);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r.fixed(decimals);
}

struct CellDiff {
  std::string row;
  std::string column;
  std::string computed;
  std::string published;
};

struct TableReport {
  int which;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // first cell is n
  std::vector<CellDiff> mismatches;
  std::size_t cells_compared = 0;
  bool pass() const { return mismatches.empty(); }
};

namespace detail {

inline void compare(TableReport& rep, const std::vector<golden::Row>& gold) {
  if (gold.size() != rep.rows.size()) throw IntegrityError("table layout differs from the published one");
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& row = rep.rows[i];
    if (row.at(0) != gold[i].n) throw IntegrityError("table rows out of order");
    for (std::size_t c = 0; c < gold[i].cells.size(); ++c) {
      ++rep.cells_compared;
      if (row.at(c + 1) != gold[i].cells[c]) {
        rep.mismatches.push_back({row[0], rep.header.at(c + 1), row[c + 1], gold[i].cells[c]});
      }
    }
  }
}

inline std::vector<std::size_t> row_indices(const std::vector<golden::Row>& gold) {
  std::vector<std::size_t> out;
  for (const auto& r : gold) out.push_back(std::stoul(r.n));
  return out;
}

inline TableReport ratio_table(int which, const std::vector<int>& weights, const std::vector<golden::Row>& gold) {
  TableReport rep{which, "", {"n"}, {}, {}, 0};
  const auto ns = row_indices(gold);
  std::vector<CoeffTable> tables;
  for (int k : weights) {
    rep.header.push_back("beta_" + std::to_string(k) + "(n)/beta_" + std::to_string(k) + "(n+1)");
    tables.push_back(beta_table(Weight(k), ns.back() + 1));
  }
  for (std::size_t n : ns) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& t : tables) {
      const auto r = t.ratio(n);
      row.push_back(r ? format_sci5(*r) : "undefined");
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace detail

/// Successive quotients for k in {4, 6, 12, 14}.
inline TableReport table1() {
  auto rep = detail::ratio_table(1, {4, 6, 12, 14}, golden::table1());
  rep.title = "Quotients of successive coefficients of 1/E_k, k in {4, 6, 12, 14}";
  detail::compare(rep, golden::table1());
  return rep;
}

/// Successive quotients for k in {8, 10, 12, 14, 16}.
inline TableReport table2() {
  auto rep = detail::ratio_table(2, {8, 10, 12, 14, 16}, golden::table2());
  rep.title = "Quotients of successive coefficients of 1/E_k, k in {8, 10, 12, 14, 16}";
  detail::compare(rep, golden::table2());
  return rep;
}

/// beta_6(n)/beta_10(n) to 30 decimals.
inline TableReport table3(mpfr_prec_t prec = 256) {
  TableReport rep{3, "Quotients beta_6(n)/beta_10(n)", {"n", "beta_6(n)/beta_10(n)"}, {}, {}, 0};
  const auto ns = detail::row_indices(golden::table3());
  const auto a = beta_table(Weight(6), ns.back());
  const auto b = beta_table(Weight(10), ns.back());
  for (std::size_t n : ns) {
    const Rational q = a.betas[n] / b.betas[n];
    Real r(prec);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    rep.rows.push_back({std::to_string(n), r.fixed(30)});
  }
  detail::compare(rep, golden::table3());
  return rep;
}

/// A_16(n)/n, A_16(10n)/(10n), A_16(100n)/(100n) to 8 decimals.
inline TableReport table4() {
  TableReport rep{4, "Portion of sign changes for k = 16",
                  {"n", "A_16(n)/n", "A_16(10n)/(10n)", "A_16(100n)/(100n)"}, {}, {}, 0};
  const auto ns = detail::row_indices(golden::table4());
  const CoeffStats s = sign_stats(Weight(16), 100 * ns.back());
  for (std::size_t n : ns) {
    rep.rows.push_back({std::to_string(n), format_fixed(s.density(n), 8), format_fixed(s.density(10 * n), 8),
                        format_fixed(s.density(100 * n), 8)});
  }
  detail::compare(rep, golden::table4());
  return rep;
}

/// Bounds for beta_6(n), n = 1..9.
inline TableReport table5() {
  TableReport rep{5, "Upper and lower bounds for beta_6(n)",
                  {"n", "hr_lower", "alpha_6(n)", "beta_6(n)", "gamma_6(n)", "hr_upper"}, {}, {}, 0};
  const auto ns = detail::row_indices(golden::table5());
  for (const auto& r : bounds_table(Weight(6), ns.back())) {
    rep.rows.push_back({std::to_string(r.n), format_sci5(*r.hr_lower), format_sci5(r.alpha), format_sci5(r.beta),
                        format_sci5(r.gamma.to_big_real(192)), format_sci5(*r.hr_upper)});
  }
  detail::compare(rep, golden::table5());
  return rep;
}

inline TableReport regenerate_table(int which) {
  switch (which) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return table4();
    case 5: return table5();
    default: throw DomainError("table number must be in 1..5, got " + std::to_string(which));
  }
}

}  // namespace eisrec
