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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eisrec.hpp"

namespace {

using eisrec::Tabular;
using nlohmann::json;

enum class Format { json, csv, text };

struct Options {
  std::vector<int> weights;
  std::optional<std::size_t> n_max;
  int power = 1;
  std::optional<long> precision_bits;
  std::string format = "text";
  std::string out;
  std::string config_path;
  int table = 0;
  std::string suite;
};

struct Output {
  std::string title;
  json doc;
  Tabular tab;
  std::vector<std::string> notes;  // text format only
  bool pass = true;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

eisrec::AnalyticConfig resolve_config(const Options& o) {
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("EISREC_CONFIG")) path = env;
  }
  eisrec::AnalyticConfig c = path.empty() ? eisrec::AnalyticConfig{} : eisrec::load_config(path);
  if (o.precision_bits) c.precision_bits = *o.precision_bits;
  if (c.precision_bits < 64) throw UsageError("precision must be at least 64 bits");
  return c;
}

int single_weight(const Options& o, int fallback) {
  if (o.weights.size() > 1) throw UsageError("this command takes a single weight");
  return o.weights.empty() ? fallback : o.weights.front();
}

std::string sci(const eisrec::BigReal& x, int digits) { return x.value().sci(digits); }

std::string ratio_text(const std::optional<eisrec::Rational>& r) {
  return r ? eisrec::format_sci5(*r) : "undefined";
}

Output cmd_coeffs(const Options& o) {
  const int k = single_weight(o, 4);
  const std::size_t n = o.n_max.value_or(20);
  const auto t = eisrec::beta_table(eisrec::Weight(k), n, o.power);
  Output out;
  out.title = o.power == 1 ? "Coefficients of 1/E_" + std::to_string(k)
                           : "Coefficients of 1/E_" + std::to_string(k) + "^" + std::to_string(o.power);
  out.doc = eisrec::to_json(t);
  out.tab.header = {"n", "beta"};
  for (std::size_t i = 0; i <= n; ++i) out.tab.rows.push_back({std::to_string(i), eisrec::format_rational(t.betas[i])});
  return out;
}

Output cmd_table(const Options& o) {
  const auto rep = eisrec::regenerate_table(o.table);
  Output out;
  out.title = "Table " + std::to_string(rep.which) + ": " + rep.title;
  out.tab = {rep.header, rep.rows};
  json mism = json::array();
  for (const auto& m : rep.mismatches) {
    mism.push_back({{"n", m.row}, {"column", m.column}, {"computed", m.computed}, {"published", m.published}});
    out.notes.push_back("MISMATCH n=" + m.row + " " + m.column + ": computed " + m.computed + ", published " +
                        m.published);
  }
  out.doc = {{"table", rep.which}, {"title", rep.title}, {"header", rep.header}, {"rows", rep.rows},
             {"cells_compared", rep.cells_compared}, {"mismatches", mism}, {"pass", rep.pass()}};
  out.notes.push_back(std::to_string(rep.cells_compared) + " cells compared with the published values, " +
                      std::to_string(rep.mismatches.size()) + " mismatches");
  out.pass = rep.pass();
  return out;
}

Output cmd_zeros(const Options& o, const eisrec::AnalyticConfig& cfg) {
  const std::vector<int> ks = o.weights.empty() ? std::vector<int>{16} : o.weights;
  Output out;
  out.title = "Zeros of E_k on the arc from i to rho";
  out.tab.header = {"k", "index", "theta", "x", "y", "multiplicity", "certified"};
  json all = json::array();
  for (int w : ks) {
    const auto zs = eisrec::find_arc_zeros(eisrec::Weight(w), cfg.precision_bits);
    json list = json::array();
    for (std::size_t i = 0; i < zs.size(); ++i) {
      json j = eisrec::to_json(zs[i]);
      j["boundary"] = zs[i].boundary;
      j["simple_certified"] = zs[i].simple_certified;
      list.push_back(j);
      const int d = std::min(30, eisrec::zero_print_digits(zs[i].theta));
      const bool cert = zs[i].boundary || zs[i].simple_certified;
      out.tab.rows.push_back({std::to_string(w), std::to_string(i), sci(zs[i].theta, d), sci(zs[i].z.re(), d),
                              sci(zs[i].z.im(), d), std::to_string(zs[i].multiplicity), cert ? "yes" : "no"});
    }
    const auto c = eisrec::census(eisrec::Weight(w));
    all.push_back({{"k", w},
                   {"precision_bits", cfg.precision_bits},
                   {"census", {{"interior", c.interior}, {"at_i", c.at_i}, {"at_rho", c.at_rho}}},
                   {"zeros", list}});
  }
  out.doc = {{"weights", all}};
  return out;
}

Output cmd_bounds(const Options& o) {
  const int w = single_weight(o, 6);
  const std::size_t n = o.n_max.value_or(9);
  const eisrec::Weight k(w);
  const auto p = eisrec::bound_params(k);
  const auto rows = eisrec::bounds_table(k, n);
  const bool hr = w == 6;
  const bool text = o.format == "text";
  Output out;
  out.title = "Bounds for beta_" + std::to_string(w) + "(n)";
  out.tab.header = {"n"};
  if (hr) out.tab.header.push_back("hr_lower");
  out.tab.header.insert(out.tab.header.end(), {"alpha", "beta", "gamma"});
  if (hr) out.tab.header.push_back("hr_upper");
  json jr = json::array();
  for (const auto& r : rows) {
    std::vector<std::string> cells{std::to_string(r.n)};
    auto exact = [&](const eisrec::Rational& q) { return text ? eisrec::format_sci5(q) : eisrec::format_rational(q); };
    if (hr) cells.push_back(exact(*r.hr_lower));
    cells.push_back(exact(r.alpha));
    cells.push_back(exact(r.beta));
    cells.push_back(text ? eisrec::format_sci5(r.gamma.to_big_real(192)) : r.gamma.str());
    if (hr) cells.push_back(exact(*r.hr_upper));
    out.tab.rows.push_back(cells);
    json row = {{"n", r.n},
                {"alpha", eisrec::format_rational(r.alpha)},
                {"beta", eisrec::format_rational(r.beta)},
                {"gamma", r.gamma.str()}};
    if (hr) {
      row["hr_lower"] = eisrec::format_rational(*r.hr_lower);
      row["hr_upper"] = eisrec::format_rational(*r.hr_upper);
    }
    jr.push_back(row);
  }
  const auto sw = eisrec::sandwich_check(k, n);
  out.doc = {{"k", w},
             {"params",
              {{"x0", eisrec::format_rational(p.x0)},
               {"eps2", eisrec::format_rational(p.eps2)},
               {"a", p.a.str()},
               {"b", p.b.str()},
               {"c", p.c.str()},
               {"Delta", eisrec::format_rational(p.Delta)},
               {"D", p.D.str()}}},
             {"rows", jr},
             {"sandwich_pass", sw.pass}};
  out.notes.push_back("Delta = " + eisrec::format_rational(p.Delta) + ", b = " + p.b.str() + ", D = " + p.D.str());
  out.notes.push_back(std::string("alpha <= beta <= gamma: ") + (sw.pass ? "holds" : "VIOLATED"));
  out.pass = sw.pass;
  return out;
}

Output cmd_asymp(const Options& o) {
  const int w = single_weight(o, 6);
  const eisrec::Weight k(w);
  Output out;
  if (w % 4 == 0 && w >= 12 && o.power == 1) {
    const std::size_t n = o.n_max.value_or(200);
    const auto r = eisrec::residual_sequence(k, n);
    const auto sub = eisrec::subsequence_extract(k, n);
    out.title = "Two-pole residuals for k = " + std::to_string(w);
    out.tab.header = {"n", "|r(n)| upper", "beta(n) / main term"};
    json rows = json::array();
    std::vector<std::string> ratio(n + 1, "");
    for (const auto& p : sub.picks) ratio[p.n] = sci(p.ratio, 8);
    for (const auto& row : r.rows) {
      const std::string up = row.r.abs_upper().str();
      out.tab.rows.push_back({std::to_string(row.n), up, ratio[row.n]});
      rows.push_back({{"n", row.n}, {"abs_r_upper", up}, {"bounded_term_abs", sci(row.bounded_abs, 10)}});
    }
    json picks = json::array();
    for (const auto& p : sub.picks) picks.push_back({{"n", p.n}, {"ratio", sci(p.ratio, 12)}});
    out.doc = {{"k", w},
               {"n_max", n},
               {"precision_bits", r.precision_bits},
               {"z", {{"x", sci(r.pole.zero.z.re(), 20)}, {"y", sci(r.pole.zero.z.im(), 20)}}},
               {"C", {{"re", sci(r.pole.C.re(), 20)}, {"im", sci(r.pole.C.im(), 20)}}},
               {"rows", rows},
               {"lead_max_lower", r.lead_max_lower.str()},
               {"trail_max_upper", r.trail_max_upper.str()},
               {"decay_pass", r.decay_pass},
               {"bounded_pass", r.bounded_pass},
               {"subsequence", {{"window", sub.window}, {"picks", picks}, {"skipped", sub.skipped}, {"pass", sub.pass}}}};
    out.notes.push_back("max trailing |r| <= " + r.trail_max_upper.str() + ", max leading |r| >= " +
                        r.lead_max_lower.str());
    out.notes.push_back(std::string("decay: ") + (r.decay_pass ? "pass" : "FAIL") +
                        ", bounded term: " + (r.bounded_pass ? "pass" : "FAIL") +
                        ", subsequence: " + (sub.pass ? "pass" : "FAIL"));
    out.pass = r.pass() && sub.pass;
    return out;
  }
  const std::size_t n = o.n_max.value_or(20);
  const double tol = (w == 8 || o.power > 1) ? 1e-2 : 1e-8;
  const auto r = eisrec::ratio_limit_check(k, n, o.power, tol);
  out.title = "beta(n)/beta(n+1) against " + r.pole + " for k = " + std::to_string(w) +
              (o.power > 1 ? ", m = " + std::to_string(o.power) : "");
  out.tab.header = {"n", "ratio", "distance"};
  json rows = json::array();
  for (const auto& row : r.rows) {
    out.tab.rows.push_back({std::to_string(row.n), sci(*row.ratio, 12), sci(*row.distance, 4)});
    rows.push_back({{"n", row.n}, {"ratio", sci(*row.ratio, 20)}, {"distance", sci(*row.distance, 6)}});
  }
  out.doc = {{"k", w}, {"m", o.power}, {"pole", r.pole}, {"target", sci(r.target, 20)},
             {"tolerance", tol}, {"rows", rows}, {"pass", r.pass}};
  if (o.power == 1 && (w == 4 || (w % 4 == 2 && w >= 6))) {
    const auto pred = eisrec::one_pole_asymptotic(k, n);
    const auto ratio = eisrec::one_pole_ratio(k, n);
    out.doc["one_pole"] = {{"n", n}, {"prediction", sci(pred, 20)}, {"beta_over_prediction", sci(ratio, 20)}};
    out.notes.push_back("one-pole prediction at n = " + std::to_string(n) + ": " + sci(pred, 12) +
                        ", beta/prediction = " + sci(ratio, 12));
    if (w == 4 || w == 6) {
      const auto hr = eisrec::hr_leading_term(k, n);
      out.doc["leading_term"] = sci(hr, 20);
    }
  }
  out.notes.push_back(std::string("limit check: ") + (r.pass ? "pass" : "FAIL"));
  out.pass = r.pass;
  return out;
}

Output cmd_verify(const Options& o, const eisrec::AnalyticConfig& cfg) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = eisrec::suite_names();
  } else {
    names = {o.suite};
  }
  eisrec::SuiteOptions so{o.weights, o.n_max, cfg};
  Output out;
  out.title = "Verification";
  out.tab.header = {"suite", "check", "result", "detail"};
  json suites = json::array();
  for (const auto& name : names) {
    const auto s = eisrec::run_suite(name, so);
    suites.push_back(eisrec::to_json(s));
    for (const auto& c : s.checks) out.tab.rows.push_back({s.suite, c.name, c.pass ? "PASS" : "FAIL", c.detail});
    out.pass = out.pass && s.pass();
  }
  out.doc = {{"suites", suites}, {"pass", out.pass}};
  out.notes.push_back(out.pass ? "all checks passed" : "some checks FAILED");
  return out;
}

void emit(std::ostream& os, const Output& out, const std::string& format) {
  if (format == "json") {
    os << out.doc.dump(2) << '\n';
  } else if (format == "csv") {
    eisrec::write_csv(os, out.tab);
  } else {
    os << out.title << "\n\n";
    eisrec::write_text(os, out.tab);
    if (!out.notes.empty()) os << '\n';
    for (const auto& n : out.notes) os << n << '\n';
  }
}

void add_common(CLI::App* cmd, Options& o, bool weights, bool nmax) {
  if (weights) {
    cmd->add_option("-k,--weight", o.weights, "Weight k (even, repeatable)")
        ->check([](const std::string& s) -> std::string {
          try {
            const int k = std::stoi(s);
            if (k < 2 || k % 2 != 0) return "weight must be an even integer >= 2";
          } catch (const std::exception&) {
            return "weight must be an integer";
          }
          return {};
        });
  }
  if (nmax) cmd->add_option("-n,--nmax", o.n_max, "Largest index n")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  cmd->add_option("-p,--precision-bits", o.precision_bits, "Working precision in bits")->check(CLI::Range(64L, 1L << 20));
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
  cmd->add_option("--config", o.config_path, "JSON configuration file (default: $EISREC_CONFIG)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficients of reciprocals of Eisenstein series"};
  app.require_subcommand(1);
  Options o;

  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients of 1/E_k or 1/E_k^m");
  add_common(coeffs, o, true, true);
  coeffs->add_option("-m,--power", o.power, "Power m of 1/E_k")->check(CLI::Range(1, 64));

  auto* table = app.add_subcommand("table", "Regenerate a published table and compare it");
  table->add_option("which", o.table, "Table number 1..5")->required()->check(CLI::Range(1, 5));
  add_common(table, o, false, false);

  auto* zeros = app.add_subcommand("zeros", "Zeros of E_k on the arc of the fundamental domain");
  add_common(zeros, o, true, false);

  auto* bounds = app.add_subcommand("bounds", "Recurrence bounds for beta_k(n), k = 2 mod 4");
  add_common(bounds, o, true, true);

  auto* asymp = app.add_subcommand("asymp", "Ratio limits, one-pole predictions and two-pole residuals");
  add_common(asymp, o, true, true);
  asymp->add_option("-m,--power", o.power, "Power m of 1/E_4")->check(CLI::Range(1, 64));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = eisrec::suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  add_common(verify, o, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const auto cfg = resolve_config(o);
    Output out;
    if (*coeffs) {
      out = cmd_coeffs(o);
    } else if (*table) {
      out = cmd_table(o);
    } else if (*zeros) {
      out = cmd_zeros(o, cfg);
    } else if (*bounds) {
      out = cmd_bounds(o);
    } else if (*asymp) {
      out = cmd_asymp(o);
    } else {
      out = cmd_verify(o, cfg);
    }
    if (o.out.empty()) {
      emit(std::cout, out, o.format);
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open '" + o.out + "' for writing");
      emit(f, out, o.format);
    }
    return out.pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const eisrec::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const eisrec::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
