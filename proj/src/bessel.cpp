// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pgf/specfun.hpp"

namespace pgf::specfun {

namespace {

bool is_half_integer(cplx a) { return a.imag() == 0.0 && is_integer(a - 0.5); }

// e^x K for alpha = +-(n + 1/2): finite sum.
cplx k_half_integer_scaled(cplx alpha, cplx x) {
  const int n = static_cast<int>(std::abs(alpha.real()) - 0.5 + 0.25);
  cplx s = 0.0, term = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) term *= static_cast<double>((n + k) * (n - k + 1)) / static_cast<double>(k) / (2.0 * x);
    s += term;
  }
  return std::sqrt(pi / (2.0 * x)) * s;
}

// e^x K_alpha(x) = int_0^inf exp(-x (cosh t - 1)) cosh(alpha t) dt by the
// trapezoidal rule; the integrand is analytic in a strip, so the rule converges
// exponentially in 1/h.
cplx k_trapezoid_scaled(cplx alpha, cplx x) {
  const double ax = std::abs(x);
  const double strip = std::min(pi / 2.0 - std::abs(std::arg(x)), std::sqrt(10.0 / (ax + std::abs(alpha))));
  const double h = 2.0 * pi * strip / (44.0 + std::abs(alpha.imag()) * strip);
  cplx sum = 0.0;
  double peak = 0.0;
  for (int j = 0; j < 1000000; ++j) {
    const double t = j * h;
    // cosh(alpha t) exp(-x(cosh t - 1)) in log form to survive large alpha t
    const cplx lg = -x * (std::cosh(t) - 1.0) + alpha * t;
    const cplx term = 0.5 * std::exp(lg) * (1.0 + std::exp(-2.0 * alpha * t));
    const double m = std::abs(term);
    sum += (j == 0 ? 0.5 : 1.0) * term;
    peak = std::max(peak, m);
    if (j > 4 && m < 1e-18 * peak && (x * std::sinh(t)).real() > std::abs(alpha.real()) + 1.0) break;
  }
  return h * sum;
}

// K_nu(x) = sqrt(pi/x) e^{-x} / (Gamma(nu+1/2) 2^nu) int_0^inf e^{-v} v^{nu-1/2} (2 + v/x)^{nu-1/2} dv,
// Re nu > -1/2, |arg x| < pi; the ray of the textbook representation is rotated onto x.
cplx k_ray_scaled(cplx nu, cplx x) {
  const cplx nm = nu - 0.5;
  auto f = [&](double u) -> cplx {
    const double v = u * u;
    return 2.0 * std::exp(-v) * std::pow(u, 2.0 * nu) * std::pow(2.0 + v / x, nm);
  };
  const double upper = std::sqrt(2.0 * std::abs(nu) + 80.0) + std::sqrt(2.0 * std::abs(nu.real()));
  boost::math::quadrature::tanh_sinh<double> q;
  double err = 0.0;
  const cplx integral = q.integrate(f, 0.0, upper, 1e-15, &err);
  return std::sqrt(pi / x) * std::exp(-lgamma(nu + 0.5) - nu * std::log(2.0)) * integral;
}

// e^x K_alpha(x) ~ sqrt(pi) sum_n (1/2+alpha-n)_{2n} / (n! (2x)^{n+1/2}), large |x|.
bool k_asymptotic_scaled(cplx alpha, cplx x, cplx& out) {
  const cplx mu = 4.0 * alpha * alpha;
  cplx term = 1.0, sum = 1.0;
  for (int n = 1; n < 200; ++n) {
    const double odd = 2.0 * n - 1.0;
    const cplx next = term * (mu - odd * odd) / (8.0 * n * x);
    if (std::abs(next) > std::abs(term)) return false;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      out = std::sqrt(pi / (2.0 * x)) * sum;
      return true;
    }
  }
  return false;
}

}  // namespace

cplx bessel_i(cplx alpha, cplx x) {
  if (x == cplx(0.0)) {
    if (alpha == cplx(0.0)) return 1.0;
    if (alpha.real() > 0.0 || is_integer(alpha)) return 0.0;
    throw Error(ErrorKind::DomainError, "I_alpha(0) diverges");
  }
  // sum_n (x/2)^{2n+alpha} / (n! Gamma(alpha+n+1)), started at the first nonzero term
  const cplx q = 0.25 * x * x;
  int n0 = 0;
  if (is_nonpositive_integer(alpha)) n0 = static_cast<int>(-alpha.real());
  cplx lead = std::exp((2.0 * n0 + alpha) * std::log(0.5 * x) - lgamma(n0 + 1.0) - lgamma(alpha + (n0 + 1.0)));
  cplx term = 1.0, sum = 1.0;
  for (int n = n0 + 1; n < 100000; ++n) {
    term *= q / (static_cast<double>(n) * (alpha + static_cast<double>(n)));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && n > std::abs(x) + 2.0) break;
    if (std::abs(sum) > 1e200) {
      sum *= 1e-200;
      term *= 1e-200;
      lead *= 1e200;
    }
  }
  return lead * sum;
}

cplx bessel_k_scaled(cplx alpha, cplx x) {
  if (x == cplx(0.0) || (x.imag() == 0.0 && x.real() < 0.0))
    throw Error(ErrorKind::DomainError, "K_alpha needs x off the closed negative real axis");
  if (alpha.real() < 0.0) alpha = -alpha;
  if (is_half_integer(alpha)) return k_half_integer_scaled(alpha, x);
  cplx asym;
  if (std::abs(x) > 40.0 + std::norm(alpha) && k_asymptotic_scaled(alpha, x, asym)) return asym;
  if (std::abs(std::arg(x)) < pi / 2.0 - 0.15) return k_trapezoid_scaled(alpha, x);
  return k_ray_scaled(alpha, x);
}

cplx bessel_k(cplx alpha, cplx x) { return std::exp(-x) * bessel_k_scaled(alpha, x); }

cplx hankel_plus(cplx alpha, cplx x) {
  return 2.0 / pi * std::exp(-I * pi * (alpha + 1.0) / 2.0) * bessel_k(alpha, -I * x);
}

cplx hankel_minus(cplx alpha, cplx x) {
  return 2.0 / pi * std::exp(I * pi * (alpha + 1.0) / 2.0) * bessel_k(alpha, I * x);
}

cplx bessel_j(cplx alpha, cplx x) {
  // Real positive argument beyond the series range: average of the Hankel pair.
  if (x.imag() == 0.0 && x.real() > 8.0 && alpha.real() > -0.5)
    return 0.5 * (hankel_plus(alpha, x) + hankel_minus(alpha, x));
  return std::exp(I * pi * alpha / 2.0) * bessel_i(alpha, -I * x);
}

cplx bessel(BesselKind kind, cplx alpha, cplx x) {
  switch (kind) {
    case BesselKind::I: return bessel_i(alpha, x);
    case BesselKind::K: return bessel_k(alpha, x);
    case BesselKind::J: return bessel_j(alpha, x);
    case BesselKind::HPlus: return hankel_plus(alpha, x);
    case BesselKind::HMinus: return hankel_minus(alpha, x);
  }
  return 0.0;
}

}  // namespace pgf::specfun
