// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Outside the disk |w| <= 0.75 the function is continued along the straight
// path from the disk by re-expanding the hypergeometric ODE in Taylor series.
// This covers w near 1 for every parameter set, including the logarithmic
// cases c - a - b in Z that defeat the textbook connection formulas.

#include <algorithm>
#include <cmath>

#include "pgf/specfun.hpp"

namespace pgf::specfun {

namespace {

constexpr double kDisk = 0.75;
constexpr int kMaxTerms = 200000;
constexpr double kRescale = 1e150;

// Ordinary normalization; c must not be a non-positive integer.
Scaled series_plain(cplx a, cplx b, cplx c, cplx x) {
  cplx sum = 1.0, term = 1.0;
  double expo = 0.0;
  int small = 0;
  for (int j = 0; j < kMaxTerms; ++j) {
    const double jd = j;
    const cplx ratio = (a + jd) * (b + jd) / ((c + jd) * (jd + 1.0)) * x;
    term *= ratio;
    if (term == cplx(0.0)) break;
    sum += term;
    if (std::abs(term) > kRescale) {
      term /= kRescale;
      sum /= kRescale;
      expo += std::log(kRescale);
    }
    if (std::abs(term) <= 1e-17 * std::abs(sum) && std::abs(ratio) < 1.0) {
      if (++small >= 2) return {sum, expo};
    } else {
      small = 0;
    }
  }
  if (small == 0 && term != cplx(0.0))
    throw Error(ErrorKind::SeriesDivergence, "hypergeometric series did not converge");
  return {sum, expo};
}

Scaled series_olver(cplx a, cplx b, cplx c, cplx x) {
  if (is_nonpositive_integer(c)) {
    // Olver form: F(a,b;-n;x) = (a)_{n+1} (b)_{n+1} x^{n+1} / (n+1)! * F(a+n+1, b+n+1; n+2; x) with the
    // right-hand F in ordinary normalization
    const int n = static_cast<int>(-c.real());
    const double m = n + 1.0;
    cplx pre = pochhammer(a, m) * pochhammer(b, m) * std::pow(x, m) * rgamma(m + 1.0);
    Scaled s = series_plain(a + m, b + m, m + 1.0, x);
    s.mant *= pre;
    return s;
  }
  Scaled s = series_plain(a, b, c, x);
  const cplx lg = lgamma(c);
  s.mant *= std::exp(cplx(0.0, -lg.imag()));
  s.expo -= lg.real();
  return s;
}

Scaled continue_ode(cplx a, cplx b, cplx c, cplx x) {
  cplx p = x * (0.5 / std::abs(x));
  const Scaled y0 = series_olver(a, b, c, p);
  Scaled yp0 = series_olver(a + 1.0, b + 1.0, c + 1.0, p);
  yp0.mant *= a * b;
  double expo = std::max(y0.expo, yp0.expo);
  cplx y = y0.mant * std::exp(y0.expo - expo);
  cplx yp = yp0.mant * std::exp(yp0.expo - expo);

  const cplx ab = a * b, apb1 = a + b + 1.0;
  for (int step = 0; step < 100000; ++step) {
    const cplx rem = x - p;
    const double dist = std::abs(rem);
    if (dist == 0.0) return {y, expo};
    const cplx A0 = p * (1.0 - p), A1 = 1.0 - 2.0 * p;
    const cplx B0 = c - apb1 * p;
    const double rho = std::min(std::abs(p), std::abs(1.0 - p));
    const double kappa = std::sqrt(std::abs(ab / A0)) + 0.5 * std::abs(B0 / A0);
    double hs = std::min({dist, 0.5 * rho, 2.0 / std::max(kappa, 1e-300)});
    const bool last = hs >= dist;
    const cplx h = last ? rem : rem / dist * hs;

    // d_k = c_k h^k of the local Taylor expansion
    cplx dkm1 = y, dk = yp * h;
    cplx sy = dkm1 + dk, syp = dk;
    const double scale0 = std::max(std::abs(y), std::abs(yp * h));
    int small = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
      const double kd = k;
      // A2 = -1, B1 = -(a+b+1), C0 = -ab
      const cplx num = (A1 * kd * (kd + 1.0) + B0 * (kd + 1.0)) * dk * h +
                       (-kd * (kd - 1.0) - apb1 * kd - ab) * dkm1 * h * h;
      const cplx dk2 = -num / (A0 * (kd + 2.0) * (kd + 1.0));
      sy += dk2;
      syp += (kd + 2.0) * dk2;
      dkm1 = dk;
      dk = dk2;
      const double tol = 1e-17 * std::max({std::abs(sy), std::abs(syp), scale0 * 1e-30});
      if (std::abs(dk) <= tol && std::abs(dkm1) <= tol) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
    y = sy;
    yp = syp / h;
    p = last ? x : p + h;
    const double mag = std::max(std::abs(y), std::abs(yp));
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      const double l = std::log(mag);
      y /= mag;
      yp /= mag;
      expo += l;
    }
  }
  throw Error(ErrorKind::SeriesDivergence, "hypergeometric continuation did not reach target");
}

}  // namespace

Scaled hyp2f1_olver_scaled(cplx a, cplx b, cplx c, cplx w) {
  if (std::abs(w) <= kDisk) return series_olver(a, b, c, w);
  if (w.imag() == 0.0 && w.real() >= 1.0) {
    const cplx s = c - a - b;
    if (w.real() == 1.0 && s.real() > 0.0) {
      // Gauss summation
      if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) return {0.0, 0.0};
      return Scaled::from_log(lgamma(s) - lgamma(c - a) - lgamma(c - b));
    }
    throw Error(ErrorKind::SeriesDivergence, "argument on the branch cut [1, inf)");
  }
  return continue_ode(a, b, c, w);
}

cplx hyp2f1_olver(cplx a, cplx b, cplx c, cplx w) { return hyp2f1_olver_scaled(a, b, c, w).value(); }

cplx hyp2f1(cplx a, cplx b, cplx c, cplx w) {
  if (is_nonpositive_integer(c)) throw Error(ErrorKind::PoleAtNonPositiveInteger, "hyp2f1: c");
  Scaled s = hyp2f1_olver_scaled(a, b, c, w);
  const cplx lg = lgamma(c);
  s.mant *= std::exp(cplx(0.0, lg.imag()));
  s.expo += lg.real();
  return s.value();
}

}  // namespace pgf::specfun
