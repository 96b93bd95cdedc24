// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Near-diagonal expansions in (beta r/2)^2, sinh^2(r/2), sin^2(r/2); far
// expansions in 1/(beta r), cosh^{-2}(r/2) and cos^2(r/2). Even dimensions
// carry the logarithmic terms.

#include <cmath>
#include <limits>

#include "green_internal.hpp"
#include "pgf/specfun.hpp"

namespace pgf {

namespace sf = specfun;

namespace detail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 4000;

struct Accum {
  cplx sum = 0.0;
  double abs_sum = 0.0;
  double last = 0.0;
  int small = 0;

  // true once two consecutive terms are negligible
  bool add(cplx t) {
    sum += t;
    abs_sum += std::abs(t);
    last = std::abs(t);
    if (last <= 1e-17 * abs_sum) return ++small >= 2;
    small = 0;
    return false;
  }
  double error() const { return 2.0 * last + 8.0 * kEps * abs_sum; }
};

double factorial(int n) { return std::tgamma(n + 1.0); }

double harmonic_number(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

cplx inv_4pi_pow(int d) { return std::pow(4.0 * pi, -0.5 * d); }

// (y)_n psi(y) exp(lscale), finite where y is a pole of psi covered by a zero
// of (y)_n; there it is -prod_{i != -y} (y + i), summed in logs.
cplx poch_times_psi(cplx y, int n, double lscale) {
  if (is_nonpositive_integer(y) && -y.real() < n) {
    const int m = static_cast<int>(-y.real());
    double lg = lscale, sign = -1.0;
    for (int i = 0; i < n; ++i) {
      if (i == m) continue;
      const double f = y.real() + i;
      lg += std::log(std::abs(f));
      if (f < 0.0) sign = -sign;
    }
    return sign * std::exp(lg);
  }
  return sf::pochhammer(y, n) * sf::digamma(y) * std::exp(lscale);
}

}  // namespace

SeriesValue euclid_near(int d, cplx b, double r) {
  if (r == 0.0) throw Error(ErrorKind::DiagonalSingularity, "series needs r > 0");
  const cplx x = 0.5 * b * r, x2 = x * x;
  const double dd = d;
  if (d % 2 == 1) {
    Accum a1, a2;
    cplx t = std::tgamma(0.5 * dd - 1.0);
    for (int k = 0; k < kMaxTerms; ++k) {
      if (a1.add(t)) break;
      t *= -x2 / ((k + 1.0) * (0.5 * dd - 2.0 - k));
    }
    cplx u = std::tgamma(1.0 - 0.5 * dd);
    for (int j = 0; j < kMaxTerms; ++j) {
      if (a2.add(u)) break;
      u *= -x2 / ((j + 1.0) * (-0.5 * dd - j));
    }
    const cplx p1 = 1.0 / (4.0 * std::pow(pi, 0.5 * dd) * std::pow(r, dd - 2.0));
    const cplx p2 = std::pow(b, d - 2) * inv_4pi_pow(d);
    return {p1 * a1.sum + p2 * a2.sum, std::abs(p1) * a1.error() + std::abs(p2) * a2.error()};
  }
  const int m = (d - 2) / 2;
  Accum a1, a2;
  for (int k = 0; k <= m - 1; ++k) a1.add((k % 2 ? -1.0 : 1.0) * factorial(m - 1 - k) / factorial(k) * std::pow(x2, k));
  const cplx lx = std::log(x);
  cplx c = 1.0 / factorial(m);  // x2^j / (j! (m+j)!)
  for (int j = 0; j < kMaxTerms; ++j) {
    const double h = harmonic_number(j) + harmonic_number(m + j);
    if (a2.add((2.0 * lx + 2.0 * euler_gamma - h) * c) && j > 2) break;
    c *= x2 / ((j + 1.0) * (m + j + 1.0));
  }
  const double p1 = 1.0 / (4.0 * std::pow(pi, 0.5 * dd) * std::pow(r, dd - 2.0));
  const cplx p2 = std::pow(b, d - 2) * ((d / 2) % 2 ? -1.0 : 1.0) * inv_4pi_pow(d);
  return {p1 * a1.sum + p2 * a2.sum, p1 * a1.error() + std::abs(p2) * a2.error()};
}

SeriesValue euclid_far(int d, cplx b, double r) {
  const double a = 0.5 * (d - 1);
  const cplx y = 2.0 * b * r;
  cplx t = 1.0, sum = 0.0;
  double err = 0.0, abs_sum = 0.0;
  for (int j = 0; j < kMaxTerms; ++j) {
    sum += t;
    abs_sum += std::abs(t);
    const cplx next = t * (a - j - 1.0) * (a + j) / ((j + 1.0) * y);
    if (next == cplx(0.0)) break;  // odd d: the series terminates
    if (std::abs(next) >= std::abs(t)) {
      err = std::abs(next);  // divergent from here: stop at the smallest term
      break;
    }
    t = next;
    err = std::abs(t);
    if (std::abs(t) < 1e-17 * std::abs(sum)) break;
  }
  const cplx pre = std::exp(-b * r + a * std::log(b / (2.0 * pi * r))) / (2.0 * b);
  return {pre * sum, std::abs(pre) * (err + 8.0 * kEps * abs_sum)};
}

SeriesValue hyper_near(int d, cplx b, double r) {
  if (r == 0.0) throw Error(ErrorKind::DiagonalSingularity, "series needs r > 0");
  const double sh = std::sinh(0.5 * r), s2 = sh * sh;
  const double dd = d;
  const cplx pre = inv_4pi_pow(d);
  if (d % 2 == 1) {
    Accum a1, a2;
    // (-1)^k Gamma((d-2)/2 - k) (1/2 + b - k)_{2k} / k! s2^k
    cplx t = std::tgamma(0.5 * dd - 1.0);
    for (int k = 0; k < kMaxTerms; ++k) {
      if (a1.add(t)) break;
      t *= -(-0.5 + b - static_cast<double>(k)) * (0.5 + b + static_cast<double>(k)) * s2 /
           ((k + 1.0) * (0.5 * dd - 2.0 - k));
    }
    // (-1)^j ((3-d)/2 + b - j)_{d-2+2j} Gamma((2-d)/2 - j) / j! s2^j
    cplx u = sf::pochhammer(0.5 * (3.0 - dd) + b, dd - 2.0) * std::tgamma(1.0 - 0.5 * dd);
    for (int j = 0; j < kMaxTerms; ++j) {
      if (a2.add(u)) break;
      u *= -(0.5 * (1.0 - dd) + b - static_cast<double>(j)) * (0.5 * (dd - 1.0) + b + static_cast<double>(j)) * s2 /
           ((j + 1.0) * (-0.5 * dd - j));
    }
    const double p1 = std::pow(s2, -0.5 * (dd - 2.0));
    return {pre * (p1 * a1.sum + a2.sum), std::abs(pre) * (p1 * a1.error() + a2.error())};
  }
  const int m = (d - 2) / 2;
  Accum a1, a2;
  {
    cplx poch = 1.0;  // (1/2 + b - k)_{2k}
    for (int k = 0; k <= m - 1; ++k) {
      a1.add((k % 2 ? -1.0 : 1.0) * poch * factorial(m - 1 - k) / factorial(k) * std::pow(s2, k));
      poch *= (-0.5 + b - static_cast<double>(k)) * (0.5 + b + static_cast<double>(k));
    }
  }
  const cplx a = 0.5 * (dd - 1.0) + b;
  const bool degenerate = b.imag() == 0.0 && is_integer(b + 0.5);
  // c = Q_j s2^j / (j! (j+m)!)
  cplx c = sf::pochhammer(0.5 * (3.0 - dd) + b, dd - 2.0) / factorial(m);
  cplx psi_a = sf::digamma(a);
  cplx psi_y = degenerate ? cplx(0.0) : sf::digamma(0.5 * (3.0 - dd) + b);
  const double ls2 = std::log(s2);
  for (int j = 0; j < kMaxTerms; ++j) {
    const cplx y = 0.5 * (3.0 - dd) + b - static_cast<double>(j);
    const double h = harmonic_number(m + j) + harmonic_number(j) - 2.0 * euler_gamma;
    const cplx cpsi =
        degenerate ? poch_times_psi(y, d - 2 + 2 * j, j * ls2 - std::lgamma(j + 1.0) - std::lgamma(j + m + 1.0))
                   : c * psi_y;
    const cplx term = c * (h - psi_a - ls2) - cpsi;
    if (a2.add(term) && j > 2) break;
    c *= (y - 1.0) * (a + static_cast<double>(j)) * s2 / ((j + 1.0) * (j + m + 1.0));
    psi_a += 1.0 / (a + static_cast<double>(j));
    if (!degenerate) psi_y -= 1.0 / (y - 1.0);
  }
  const double p1 = std::pow(s2, -static_cast<double>(m));
  const double sign = m % 2 ? -1.0 : 1.0;
  return {pre * (p1 * a1.sum + sign * a2.sum), std::abs(pre) * (p1 * a1.error() + a2.error())};
}

SeriesValue hyper_far(int d, cplx b, double r) {
  const double ch = std::cosh(0.5 * r), c2 = ch * ch;
  const double dd = d;
  const cplx lg = sf::lgamma(0.5 + b) + sf::lgamma(0.5 * (dd - 1.0) + b) - sf::lgamma(1.0 + 2.0 * b) -
                  (2.0 * b + dd - 1.0) * std::log(ch);
  cplx t = std::exp(lg);
  Accum acc;
  for (int j = 0; j < kMaxTerms; ++j) {
    if (acc.add(t)) break;
    const double jd = j;
    t *= (0.5 + b + jd) * (0.5 * (dd - 1.0) + b + jd) / ((jd + 1.0) * (1.0 + 2.0 * b + jd) * c2);
  }
  const cplx pre = inv_4pi_pow(d);
  return {pre * acc.sum, std::abs(pre) * acc.error()};
}

SeriesValue sphere_near(int d, cplx b, double r) {
  if (r == 0.0) throw Error(ErrorKind::DiagonalSingularity, "series needs r > 0");
  const double s = std::sin(0.5 * r), s2 = s * s;
  const double dd = d;
  const cplx ib = I * b;
  const cplx pre = inv_4pi_pow(d);
  if (d % 2 == 1) {
    Accum a1, a2;
    cplx t = std::tgamma(0.5 * dd - 1.0);
    for (int k = 0; k < kMaxTerms; ++k) {
      if (a1.add(t)) break;
      t *= (-0.5 + ib - static_cast<double>(k)) * (0.5 + ib + static_cast<double>(k)) * s2 /
           ((k + 1.0) * (0.5 * dd - 2.0 - k));
    }
    const double m = 0.5 * (dd - 2.0);
    cplx u = sf::pochhammer(0.5 + ib, m) * sf::pochhammer(0.5 - ib, m) * std::tgamma(1.0 - 0.5 * dd);
    for (int j = 0; j < kMaxTerms; ++j) {
      if (a2.add(u)) break;
      const double jd = j;
      u *= -(0.5 * (dd - 1.0) + ib + jd) * (0.5 * (dd - 1.0) - ib + jd) * s2 / ((jd + 1.0) * (-0.5 * dd - jd));
    }
    const double p1 = std::pow(s2, -0.5 * (dd - 2.0));
    return {pre * (p1 * a1.sum + a2.sum), std::abs(pre) * (p1 * a1.error() + a2.error())};
  }
  const int m = (d - 2) / 2;
  Accum a1, a2;
  {
    cplx poch = 1.0;
    for (int k = 0; k <= m - 1; ++k) {
      a1.add(poch * factorial(m - 1 - k) / factorial(k) * std::pow(s2, k));
      poch *= (-0.5 + ib - static_cast<double>(k)) * (0.5 + ib + static_cast<double>(k));
    }
  }
  const cplx ap = 0.5 * (dd - 1.0) + ib, am = 0.5 * (dd - 1.0) - ib;
  cplx c = sf::pochhammer(0.5 * (3.0 - dd) + ib, dd - 2.0) / factorial(m);
  cplx psi_p = sf::digamma(ap), psi_m = sf::digamma(am);
  const double ls2 = std::log(s2);
  for (int j = 0; j < kMaxTerms; ++j) {
    const double jd = j;
    const double h = harmonic_number(m + j) + harmonic_number(j) - 2.0 * euler_gamma;
    if (a2.add(c * (h - psi_p - psi_m - ls2)) && j > 2) break;
    c *= -(0.5 * (1.0 - dd) + ib - jd) * (ap + jd) * s2 / ((jd + 1.0) * (jd + m + 1.0));
    psi_p += 1.0 / (ap + jd);
    psi_m += 1.0 / (am + jd);
  }
  const double p1 = std::pow(s2, -static_cast<double>(m));
  return {pre * (p1 * a1.sum + a2.sum), std::abs(pre) * (p1 * a1.error() + a2.error())};
}

SeriesValue sphere_antipodal(int d, cplx b, double r) {
  const double c = std::cos(0.5 * r), c2 = c * c;
  const double dd = d;
  const cplx ib = I * b;
  const cplx a = 0.5 * (dd - 1.0);
  cplx t = std::exp(sf::lgamma(a + ib) + sf::lgamma(a - ib) - sf::lgamma(0.5 * dd));
  Accum acc;
  for (int j = 0; j < kMaxTerms; ++j) {
    if (acc.add(t) || c2 == 0.0) break;
    const double jd = j;
    t *= (a + ib + jd) * (a - ib + jd) * c2 / ((0.5 * dd + jd) * (jd + 1.0));
  }
  const cplx pre = inv_4pi_pow(d);
  return {pre * acc.sum, std::abs(pre) * acc.error()};
}

}  // namespace detail

SeriesValue green_series(const Geometry& g, int d, const SpectralPoint& s, const Separation& sep, Regime regime) {
  if (d < 1) throw Error(ErrorKind::DomainError, "dimension must be >= 1");
  if (g.kind != GeometryKind::Spherical && s.boundary == Boundary::None && !(s.beta.real() > 0.0))
    throw Error(ErrorKind::OnSpectrum, "z lies on [0, inf) without a boundary tag");
  const double r = sep.r, ab = std::abs(s.beta);
  const double R = g.kind == GeometryKind::Euclidean ? 1.0 : g.R;
  if (regime == Regime::NearDiagonal) {
    bool ok = ab * r < 10.0 || (g.kind != GeometryKind::Euclidean && r < 0.5 * R);
    // the curved expansions converge only for sinh^2, sin^2 (r/2R) < 1
    if (g.kind == GeometryKind::Hyperbolic) ok = ok && std::pow(std::sinh(0.5 * r / R), 2) <= 0.75;
    if (g.kind == GeometryKind::Spherical) ok = ok && std::pow(std::sin(0.5 * r / R), 2) <= 0.75;
    if (!ok)
      throw Error(ErrorKind::RegimeMismatch,
                  "near-diagonal series needs |beta| r < 10 or r < R/2, inside the convergence disc");
  } else {
    const bool ok = g.kind == GeometryKind::Spherical ? r >= 0.5 * pi * R : ab * r > 5.0;
    if (!ok) throw Error(ErrorKind::RegimeMismatch, "far-field series needs |beta| r > 5 (r >= pi R/2 on the sphere)");
  }
  const bool near = regime == Regime::NearDiagonal;
  SeriesValue v;
  switch (g.kind) {
    case GeometryKind::Euclidean:
      return near ? detail::euclid_near(d, s.beta, r) : detail::euclid_far(d, s.beta, r);
    case GeometryKind::Hyperbolic: {
      const cplx bu = s.beta * R;
      v = near ? detail::hyper_near(d, bu, r / R) : detail::hyper_far(d, bu, r / R);
      break;
    }
    case GeometryKind::Spherical: {
      detail::check_sphere_spectrum(d, s.z * (R * R));
      if (r > pi * R * (1.0 + 1e-14)) throw Error(ErrorKind::DomainError, "spherical separation exceeds pi R");
      const cplx bu = s.beta * R;
      v = near ? detail::sphere_near(d, bu, r / R) : detail::sphere_antipodal(d, bu, std::min(r / R, pi));
      break;
    }
  }
  const double scale = std::pow(R, 2.0 - d);
  return {scale * v.value, scale * v.truncation_error};
}

}  // namespace pgf
