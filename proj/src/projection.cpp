// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "pgf/green.hpp"
#include "pgf/specfun.hpp"

namespace pgf {

namespace sf = specfun;

namespace {

constexpr long kMaxPanels = 200000;

// J_nu(x) / x^nu, continuous at x = 0
double j_over_power(double nu, double x) {
  if (x < 1e-4) return (1.0 - x * x / (4.0 * (nu + 1.0))) / (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
  return boost::math::cyl_bessel_j(nu, x) / std::pow(x, nu);
}

// Gauss-Legendre panels over [lo, hi] no wider than the oscillation allows.
template <class F>
double panels(F&& f, double lo, double hi, double r) {
  if (!(hi > lo)) return 0.0;
  double width = 1.0;
  if (r > 0.0) width = std::min(width, pi / (4.0 * r * hi));
  const double n = std::ceil((hi - lo) / width);
  if (n > kMaxPanels) throw Error(ErrorKind::QuadratureFailure, "projection band too wide for the separation");
  const long np = static_cast<long>(n);
  const double h = (hi - lo) / np;
  double sum = 0.0;
  for (long k = 0; k < np; ++k)
    sum += boost::math::quadrature::gauss<double, 20>::integrate(f, lo + k * h, lo + (k + 1) * h);
  if (!std::isfinite(sum)) throw Error(ErrorKind::QuadratureFailure, "non-finite projection integrand");
  return sum;
}

double euclid_projection(int d, double a, double b, double r) {
  const double nu = 0.5 * d - 1.0;
  auto f = [&](double zeta) {
    return std::pow(zeta / (2.0 * pi), 0.5 * d) * std::pow(zeta, nu) * j_over_power(nu, zeta * r);
  };
  return panels(f, std::sqrt(a), std::sqrt(b), r);
}

// unit radius
double hyper_projection(int d, double a, double b, double r) {
  const double hd = 0.5 * (d - 1);
  const cplx alpha = 0.5 * d - 1.0;
  const double w = std::cosh(r);
  const double lpre = -std::log(pi) - 0.5 * d * std::log(4.0 * pi);
  auto f = [&](double zeta) {
    // log(2 zeta sinh(pi zeta)) without overflow
    const double lsh = pi * zeta + std::log1p(-std::exp(-2.0 * pi * zeta));
    const cplx lw = lsh + std::log(zeta) + sf::lgamma(cplx(hd, zeta)) + sf::lgamma(cplx(hd, -zeta)) + lpre;
    const sf::Scaled s = sf::gegenbauer_S_scaled({alpha, cplx(0.0, zeta)}, w);
    return (s.mant * std::exp(lw + s.expo)).real();
  };
  return panels(f, std::sqrt(a), std::sqrt(b), r);
}

// unit radius
double sphere_level(int d, int l, double r) {
  if (l < 0) throw Error(ErrorKind::DomainError, "harmonic degree must be >= 0");
  if (d == 1) return l == 0 ? 1.0 / (2.0 * pi) : std::cos(l * r) / pi;
  const double mu = 0.5 * (d - 1);
  const double c = (2.0 * l + d - 1.0) * std::tgamma(mu) / (4.0 * std::pow(pi, 0.5 * (d + 1)));
  return c * sf::gegenbauer_C(l, mu, std::cos(r)).real();
}

}  // namespace

double projection_kernel(const Geometry& g, int d, const Band& band, const Separation& sep) {
  if (d < 1) throw Error(ErrorKind::DomainError, "dimension must be >= 1");
  const double R = g.kind == GeometryKind::Euclidean ? 1.0 : g.R;
  const double r = sep.r / R;
  if (const auto* lv = std::get_if<SphereLevel>(&band)) {
    if (g.kind != GeometryKind::Spherical) throw Error(ErrorKind::DomainError, "a level band needs the sphere");
    return std::pow(R, -d) * sphere_level(d, lv->l, r);
  }
  const auto& iv = std::get<SpectralInterval>(band);
  if (!(iv.a >= 0.0 && iv.b > iv.a)) throw Error(ErrorKind::DomainError, "band needs 0 <= a < b");
  switch (g.kind) {
    case GeometryKind::Euclidean: return euclid_projection(d, iv.a, iv.b, sep.r);
    case GeometryKind::Hyperbolic: return std::pow(R, -d) * hyper_projection(d, iv.a * R * R, iv.b * R * R, r);
    case GeometryKind::Spherical: {
      double sum = 0.0;
      for (int l = 0;; ++l) {
        const double e = std::pow(l + 0.5 * (d - 1), 2) / (R * R);
        if (e >= iv.b) break;
        if (e >= iv.a) sum += sphere_level(d, l, r);
      }
      return std::pow(R, -d) * sum;
    }
  }
  return 0.0;
}

}  // namespace pgf
