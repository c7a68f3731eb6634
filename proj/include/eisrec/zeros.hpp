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

// Zeros of E_k on the unit-circle arc of the fundamental domain.
//
// On z = e^{i t} the function F(t) = e^{i k t / 2} E_k(e^{i t}) is real, so
// zeros are located as sign changes of F. All work happens on
// t in [pi/2, 2pi/3] (Re z <= 0), and results are reported after the
// reflection z -> -conj(z), i.e. with 0 <= Re z <= 1/2.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eisrec/analytic.hpp"
#include "eisrec/certified.hpp"
#include "eisrec/eisenstein.hpp"
#include "eisrec/errors.hpp"

namespace eisrec {

struct ArcValue {
  BigReal value;  // Re F(t)
  BigReal imag;   // Im F(t); must vanish within its error
};

class ArcEvaluator {
 public:
  ArcEvaluator(Weight k, mpfr_prec_t prec)
      : k_(k), prec_(prec), e_(k, SeriesKind::E, prec), t_(k, SeriesKind::ThetaE, prec) {
    if (k.value() < 4) throw DomainError("arc zeros: weight must be >= 4");
  }

  mpfr_prec_t prec() const { return prec_; }
  Weight weight() const { return k_; }

  ArcValue operator()(const BigReal& t) {
    const BigReal x = cos(t);
    const BigReal y = sin(t);
    const BigComplex q = q_of_z(BigComplex(x, y));
    const BigComplex e = e_.evaluate(q, tail_target());
    const BigReal half_kt = BigReal::exact(k_.value(), prec_) * t / BigReal::exact(2, prec_);
    const BigComplex f = BigComplex(cos(half_kt), sin(half_kt)) * e;
    return {f.re(), f.im()};
  }

  /// F'(t) = Re e^{ikt/2} ((ik/2) E(q) - 2 pi z Theta(E)(q)), without error
  /// tracking beyond what the arithmetic carries; used for Newton steps only.
  BigReal derivative(const BigReal& t) {
    const BigComplex z(cos(t), sin(t));
    const BigComplex q = q_of_z(z);
    const BigComplex e = e_.evaluate(q, tail_target());
    const BigComplex th = t_.evaluate(q, tail_target());
    const BigReal half_k = BigReal::exact(k_.value(), prec_) / BigReal::exact(2, prec_);
    const BigComplex ik2(BigReal(prec_), half_k);
    const BigReal two_pi = BigReal::exact(2, prec_) * BigReal::pi(prec_);
    const BigComplex inner = ik2 * e - two_pi * (z * th);
    const BigReal half_kt = half_k * t;
    return (BigComplex(cos(half_kt), sin(half_kt)) * inner).re();
  }

  SeriesEvaluator& theta_series() { return t_; }

 private:
  Err tail_target() const { return Err::pow2(-static_cast<long>(prec_)); }

  Weight k_;
  mpfr_prec_t prec_;
  SeriesEvaluator e_;
  SeriesEvaluator t_;
};

/// Re(e^{ikt/2} E_k(e^{it})) for t in [pi/2, 2pi/3]; the imaginary part is
/// returned alongside for the realness check.
inline ArcValue arc_function(Weight k, const BigReal& t) {
  ArcEvaluator ev(k, t.prec());
  return ev(t);
}

struct ZeroRecord {
  int k = 0;
  BigReal theta;        // arg z in [pi/3, pi/2]; err is the enclosure half-width
  BigComplex z;         // x + i y
  int multiplicity = 1;
  BigComplex q_point;   // e^{2 pi i z}
  BigComplex theta_Ek;  // Theta(E_k)(q_point)
  bool boundary = false;         // z = i or z = rho, assigned by the census
  bool simple_certified = false; // certified sign change of F across the enclosure
};

/// Boundary zeros per residue class s of k = 12 N + s.
struct Census {
  int interior;
  int at_i;    // multiplicity at i
  int at_rho;  // multiplicity at rho
  int total() const { return interior + at_i + at_rho; }
};

inline Census census(Weight k) {
  const auto [N, s] = split_weight(k);
  switch (s) {
    case 0: return {N, 0, 0};
    case 4: return {N, 0, 1};
    case 6: return {N, 1, 0};
    case 8: return {N, 0, 2};
    case 10: return {N, 1, 1};
    case 14: return {N, 1, 2};
    default: throw IntegrityError("unreachable weight class");
  }
}

namespace detail {

struct Bracket {
  BigReal lo;
  BigReal hi;
  int sign_lo;
};

// Sample point pi (3M + j) / (6M).
inline BigReal arc_sample(std::size_t M, std::size_t j, mpfr_prec_t prec) {
  return BigReal::pi(prec) * BigReal::from_rational(Rational(static_cast<unsigned long>(3 * M + j),
                                                             static_cast<unsigned long>(6 * M)),
                                                    prec);
}

struct ScanResult {
  std::vector<Bracket> brackets;
  mpfr_prec_t prec;
};

// Uniform scan of the open arc, doubling precision while some sample has an
// uncertain sign and doubling the grid until the interior census is met.
inline ScanResult scan_arc(Weight k, mpfr_prec_t prec) {
  const int expected = census(k).interior;
  std::size_t M = std::max<std::size_t>(64, 8 * static_cast<std::size_t>(k.value()));
  for (int grid_round = 0; grid_round < 5; ++grid_round, M *= 2) {
    for (int prec_round = 0; prec_round < 4; ++prec_round, prec *= 2) {
      ArcEvaluator ev(k, prec);
      std::vector<BigReal> pts;
      std::vector<int> signs;
      bool uncertain = false;
      for (std::size_t j = 1; j < M; ++j) {
        BigReal t = arc_sample(M, j, prec);
        const int s = ev(t).value.certain_sign();
        if (s == 0) {
          uncertain = true;
          break;
        }
        pts.push_back(std::move(t));
        signs.push_back(s);
      }
      if (uncertain) continue;
      std::vector<Bracket> brackets;
      for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
        if (signs[i] != signs[i + 1]) brackets.push_back({pts[i], pts[i + 1], signs[i]});
      }
      if (static_cast<int>(brackets.size()) == expected) return {std::move(brackets), prec};
      break;  // precision is fine, the grid is too coarse
    }
  }
  throw IntegrityError("zero census mismatch for weight " + std::to_string(k.value()));
}

inline BigReal midpoint(const BigReal& a, const BigReal& b) {
  return (a + b) / BigReal::exact(2, std::max(a.prec(), b.prec()));
}

// Encloses the sign change inside `b` to half-width about 2^-bits using
// bisection followed by Newton steps at doubling precision. Returns the
// point (Re z <= 0 parameter) and the half-width of the certified enclosure.
inline std::pair<BigReal, Err> refine_bracket(Weight k, const Bracket& b, long bits, mpfr_prec_t prec) {
  ArcEvaluator ev(k, prec);
  BigReal lo = b.lo, hi = b.hi;
  const long bisect_bits = std::min<long>(bits, 48);
  const Err bisect_width = Err::pow2(-bisect_bits);
  while (bisect_width < Err::abs_of((hi - lo).value())) {
    BigReal m = midpoint(lo, hi);
    const int s = ev(m).value.certain_sign();
    if (s == 0) break;
    (s == b.sign_lo ? lo : hi) = std::move(m);
  }
  BigReal t = midpoint(lo, hi);

  if (bits > bisect_bits) {
    // Newton on F; each step roughly doubles the correct bits, so the
    // working precision doubles alongside.
    mpfr_prec_t p = std::min<mpfr_prec_t>(prec, 128);
    for (int iter = 0; iter < 100; ++iter) {
      ArcEvaluator step(k, p);
      const BigReal tp(t.at_prec(p).value(), Err());
      const BigReal f(step(tp).value.value(), Err());
      const BigReal d(step.derivative(tp).value(), Err());
      const BigReal next(((tp - f / d)).value(), Err());
      const Real delta = (next - tp).value();
      t = next.at_prec(prec);
      t = BigReal(t.value(), Err());
      const bool settled = delta.is_zero() || mpfr_get_exp(delta.get()) < -static_cast<long>(p) / 2;
      if (p == prec && (delta.is_zero() || mpfr_get_exp(delta.get()) < -bits - 8)) break;
      if (settled) p = std::min<mpfr_prec_t>(prec, 2 * p);
    }
    if (certainly_less(t, lo) || certainly_less(hi, t)) t = midpoint(lo, hi);
  }

  // Certify a sign change on [t - w, t + w], widening w as needed.
  Err w = Err::pow2(-bits);
  for (int widen = 0; widen < 400; ++widen) {
    const BigReal wr(w.real(), Err());
    const int sl = ev(t - wr).value.certain_sign();
    const int sr = ev(t + wr).value.certain_sign();
    if (sl != 0 && sr != 0 && sl != sr) return {t, w + t.err()};
    w = w * Err(2.0);
  }
  throw IntegrityError("could not certify an enclosure for a zero of weight " + std::to_string(k.value()));
}

inline ZeroRecord make_record(Weight k, ArcEvaluator& ev, BigReal theta, BigComplex z, BigComplex q, int mult,
                              bool boundary) {
  ZeroRecord r;
  r.k = k.value();
  r.theta = std::move(theta);
  r.z = std::move(z);
  r.multiplicity = mult;
  r.theta_Ek = ev.theta_series().evaluate(q, Err::pow2(-static_cast<long>(ev.prec())));
  r.q_point = std::move(q);
  r.boundary = boundary;
  r.simple_certified = !boundary;
  return r;
}

inline ZeroRecord interior_record(Weight k, const BigReal& t_left, const Err& halfwidth, mpfr_prec_t prec) {
  ArcEvaluator ev(k, prec);
  const BigReal t = BigReal::pi(prec) - t_left;  // reflection z -> -conj(z)
  BigReal theta(t.value(), halfwidth + Err::ulp(t.value()));
  BigComplex z(cos(theta), sin(theta));
  BigComplex q = q_of_z(z);
  return make_record(k, ev, std::move(theta), std::move(z), std::move(q), 1, false);
}

inline ZeroRecord i_record(Weight k, int mult, mpfr_prec_t prec) {
  ArcEvaluator ev(k, prec);
  const auto pi = BigReal::pi(prec);
  // F(pi/2) has to vanish for the census to hold.
  if (ev(pi / BigReal::exact(2, prec)).value.certain_sign() != 0) {
    throw IntegrityError("E_" + std::to_string(k.value()) + "(i) is not zero within error");
  }
  BigComplex z(BigReal::exact(0, prec), BigReal::exact(1, prec));
  return make_record(k, ev, pi / BigReal::exact(2, prec), std::move(z), special_point(SpecialPoint::qi, prec), mult,
                     true);
}

inline ZeroRecord rho_record(Weight k, int mult, mpfr_prec_t prec) {
  ArcEvaluator ev(k, prec);
  const auto pi = BigReal::pi(prec);
  if (ev(BigReal::exact(2, prec) * pi / BigReal::exact(3, prec)).value.certain_sign() != 0) {
    throw IntegrityError("E_" + std::to_string(k.value()) + "(rho) is not zero within error");
  }
  BigComplex z(BigReal::from_rational(Rational(1, 2), prec), sqrt(BigReal::exact(3, prec)) / BigReal::exact(2, prec));
  return make_record(k, ev, pi / BigReal::exact(3, prec), std::move(z), special_point(SpecialPoint::qrho, prec), mult,
                     true);
}

inline mpfr_prec_t working_prec(long bits) { return static_cast<mpfr_prec_t>(std::max<long>(bits + 32, 96)); }

// Bracketing only needs certain signs, which a modest precision provides.
inline mpfr_prec_t scan_prec(mpfr_prec_t prec) { return std::min<mpfr_prec_t>(prec, 128); }

}  // namespace detail

/// All zeros of E_k on the closed arc, ordered from i towards rho (largest
/// imaginary part first). Interior zeros are enclosed to about 2^-bits.
inline std::vector<ZeroRecord> find_arc_zeros(Weight k, long bits = 64) {
  if (k.value() < 4) throw DomainError("find_arc_zeros: weight must be >= 4");
  const Census c = census(k);
  const mpfr_prec_t prec = detail::working_prec(bits);
  auto scan = detail::scan_arc(k, detail::scan_prec(prec));
  const mpfr_prec_t wp = std::max(prec, scan.prec);

  std::vector<ZeroRecord> out;
  if (c.at_i > 0) out.push_back(detail::i_record(k, c.at_i, wp));
  for (const auto& b : scan.brackets) {
    auto [t, w] = detail::refine_bracket(k, b, bits, wp);
    out.push_back(detail::interior_record(k, t, w, wp));
  }
  if (c.at_rho > 0) out.push_back(detail::rho_record(k, c.at_rho, wp));
  return out;
}

/// The zero z_k with the largest imaginary part.
inline ZeroRecord largest_imag_zero(Weight k, long bits = 64) {
  const int w = k.value();
  if (w < 4) throw DomainError("largest_imag_zero: weight must be >= 4");
  const mpfr_prec_t prec = detail::working_prec(bits);
  if (w % 4 == 2) return detail::i_record(k, 1, prec);
  if (w == 4) return detail::rho_record(k, 1, prec);
  if (w == 8) return detail::rho_record(k, 2, prec);
  auto scan = detail::scan_arc(k, detail::scan_prec(prec));
  const mpfr_prec_t wp = std::max(prec, scan.prec);
  // The first sign change after t = pi/2 is the zero closest to i.
  auto [t, hw] = detail::refine_bracket(k, scan.brackets.front(), bits, wp);
  return detail::interior_record(k, t, hw, wp);
}

struct PhiReport {
  int k;
  int N;
  BigReal phi;  // (2/pi) arg z_k
  Rational lower;
  bool pass;
};

/// phi = (2/pi) arg z_k lies in ((N-1)/N, 1) for k = 0 mod 4, k >= 12.
inline PhiReport phi_interval_check(Weight k, long bits = 64) {
  const int w = k.value();
  if (w < 12 || w % 4 != 0) throw DomainError("phi_interval_check: need k >= 12 with k = 0 mod 4");
  const auto [N, s] = split_weight(k);
  const ZeroRecord z = largest_imag_zero(k, bits);
  const auto prec = z.theta.prec();
  const BigReal phi = BigReal::exact(2, prec) * z.theta / BigReal::pi(prec);
  const Rational lower(N - 1, N);
  const bool pass = certainly_less(BigReal::from_rational(lower, prec), phi) &&
                    certainly_less(phi, BigReal::exact(1, prec));
  return {w, N, phi, lower, pass};
}

inline int zero_print_digits(const BigReal& x) {
  return std::max(17, static_cast<int>(static_cast<double>(x.prec() - 32) * 0.30103));
}

inline nlohmann::json to_json(const ZeroRecord& r) {
  const int d = zero_print_digits(r.theta);
  return nlohmann::json{{"k", r.k},
                        {"theta", r.theta.value().sci(d)},
                        {"x", r.z.re().value().sci(d)},
                        {"y", r.z.im().value().sci(d)},
                        {"multiplicity", r.multiplicity},
                        {"q_re", r.q_point.re().value().sci(d)},
                        {"q_im", r.q_point.im().value().sci(d)},
                        {"theta_Ek_re", r.theta_Ek.re().value().sci(d)},
                        {"theta_Ek_im", r.theta_Ek.im().value().sci(d)}};
}

}  // namespace eisrec
