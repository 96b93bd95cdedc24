// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgf/green.hpp"

#include <algorithm>
#include <cmath>

#include "green_internal.hpp"
#include "odd_tables.hpp"
#include "pgf/specfun.hpp"

namespace pgf {

namespace sf = specfun;

Geometry Geometry::hyperbolic(double R) {
  if (!(R > 0.0)) throw Error(ErrorKind::DomainError, "radius must be positive");
  return {GeometryKind::Hyperbolic, R};
}

Geometry Geometry::spherical(double R) {
  if (!(R > 0.0)) throw Error(ErrorKind::DomainError, "radius must be positive");
  return {GeometryKind::Spherical, R};
}

const char* to_string(GeometryKind k) noexcept {
  switch (k) {
    case GeometryKind::Euclidean: return "euclidean";
    case GeometryKind::Hyperbolic: return "hyperbolic";
    case GeometryKind::Spherical: return "spherical";
  }
  return "?";
}

SpectralPoint SpectralPoint::from_z(cplx z) {
  // -z on the negative real axis carries a signed zero that would flip the
  // branch of std::sqrt; the half-line is handled explicitly.
  if (z.imag() == 0.0 && z.real() >= 0.0) return {z, cplx(0.0, -std::sqrt(z.real())), Boundary::None};
  cplx b = std::sqrt(-z);
  if (b.real() < 0.0) b = -b;
  return {z, b, Boundary::None};
}

SpectralPoint SpectralPoint::from_beta(cplx beta) {
  if (!(beta.real() > 0.0)) throw Error(ErrorKind::DomainError, "beta needs Re beta > 0");
  return {-beta * beta, beta, Boundary::None};
}

SpectralPoint SpectralPoint::boundary_value(double zeta, Boundary side) {
  if (!(zeta > 0.0) || side == Boundary::None)
    throw Error(ErrorKind::DomainError, "boundary value needs zeta > 0 and a side");
  const cplx b = side == Boundary::PlusI0 ? cplx(0.0, -zeta) : cplx(0.0, zeta);
  return {cplx(zeta * zeta, 0.0), b, side};
}

SpectralPoint SpectralPoint::scaled(double R) const { return {z * (R * R), beta * R, boundary}; }

Separation Separation::distance(double r) {
  if (!(r >= 0.0)) throw Error(ErrorKind::DomainError, "separation must be non-negative");
  return {r, std::nullopt};
}

Separation Separation::on_line(double x, double xp) { return {std::abs(x - xp), std::array<double, 2>{x, xp}}; }

Separation Separation::on_circle(double theta, double thetap, double R) {
  double d = std::fmod(std::abs(theta - thetap), 2.0 * pi);
  d = std::min(d, 2.0 * pi - d);
  return {R * d, std::array<double, 2>{theta, thetap}};
}

double Separation::chord(const Geometry& g) const {
  switch (g.kind) {
    case GeometryKind::Euclidean: return r;
    case GeometryKind::Hyperbolic: return std::cosh(r / g.R);
    case GeometryKind::Spherical: return -std::cos(r / g.R);
  }
  return r;
}

double sphere_area(int d) { return 2.0 * std::pow(pi, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1)); }

namespace detail {

void check_sphere_spectrum(int d, cplx zu) {
  if (zu.real() < -0.5 || std::abs(zu.imag()) > 1.0) return;
  const double shift = 0.5 * (d - 1);
  const double root = std::sqrt(std::max(zu.real(), 0.0));
  const double lf = std::max(0.0, std::round(root - shift));
  for (double l = std::max(0.0, lf - 1.0); l <= lf + 1.0; l += 1.0) {
    const double w = l + shift;
    const double spacing = 2.0 * w + 1.0;
    if (std::abs(zu - w * w) < 1e-8 * spacing)
      throw Error(ErrorKind::OnSpectrum, "z coincides with a sphere eigenvalue");
  }
}

cplx euclid_unit(int d, cplx b, double r, EvalPath path) {
  if (d == 1 && path != EvalPath::Special) return std::exp(-b * r) / (2.0 * b);
  if (r == 0.0) {
    if (d == 1) return 1.0 / (2.0 * b);
    throw Error(ErrorKind::DiagonalSingularity, "kernel is singular at r = 0");
  }
  if (d % 2 == 1 && d <= kMaxOddDim && path != EvalPath::Special) {
    const int n = (d - 3) / 2;
    const cplx x = b * r;
    cplx sum = 0.0;
    for (const auto& t : euclid_odd_terms(n)) sum += t.c * std::pow(x, t.k);
    return std::exp(-x) * sum / (2.0 * std::pow(2.0 * pi, n + 1) * std::pow(r, 2 * n + 1));
  }
  if (path == EvalPath::Elementary) throw Error(ErrorKind::UnsupportedParameterRegion, "no elementary form");
  return euclid_complex_d(d, b, r);
}

cplx euclid_complex_d(cplx d, cplx b, double r) {
  const cplx nu = 0.5 * d - 1.0;
  const cplx x = b * r;
  // (2 pi)^{-d/2} (b/r)^nu K_nu(b r) with e^{-x} kept in the exponent
  const cplx lg = -0.5 * d * std::log(2.0 * pi) + nu * (std::log(b) - std::log(r)) - x;
  return std::exp(lg) * sf::bessel_k_scaled(nu, x);
}

cplx hyper_complex_d(cplx d, cplx b, double r) {
  if (r == 0.0) throw Error(ErrorKind::DiagonalSingularity, "kernel is singular at r = 0");
  const cplx alpha = 0.5 * d - 1.0;
  sf::Scaled z = sf::gegenbauer_Z_scaled({alpha, b}, std::cosh(r));
  const cplx lg = 0.5 * std::log(pi / 2.0) - 0.5 * d * std::log(2.0 * pi) + sf::lgamma(0.5 * (d - 1.0) + b) -
                  b * std::log(2.0);
  z *= sf::Scaled::from_log(lg);
  return z.value();
}

cplx sphere_complex_d(cplx d, cplx b, double r) {
  if (r == 0.0) throw Error(ErrorKind::DiagonalSingularity, "kernel is singular at r = 0");
  const cplx a = 0.5 * (d - 1.0);
  sf::Scaled s = sf::gegenbauer_S_scaled({0.5 * d - 1.0, I * b}, -std::cos(r));
  const cplx lg = sf::lgamma(a + I * b) + sf::lgamma(a - I * b) - 0.5 * d * std::log(4.0 * pi);
  s *= sf::Scaled::from_log(lg);
  return s.value();
}

cplx hyper_unit(int d, cplx b, double r, EvalPath path) {
  if (d == 1 && path != EvalPath::Special) return std::exp(-b * r) / (2.0 * b);
  if (r == 0.0) {
    if (d == 1) return 1.0 / (2.0 * b);
    throw Error(ErrorKind::DiagonalSingularity, "kernel is singular at r = 0");
  }
  if (d % 2 == 1 && d <= kMaxOddDim && path != EvalPath::Special) {
    const int n = (d - 3) / 2;
    const double lch = std::log(std::cosh(r)), lsh = std::log(std::sinh(r));
    cplx sum = 0.0;
    for (const auto& t : hyper_odd_terms(n)) sum += t.c * std::pow(b, t.a) * std::exp(t.p * lch - t.q * lsh);
    return std::exp(-b * r) * sum / (2.0 * std::pow(2.0 * pi, n + 1));
  }
  if (path == EvalPath::Elementary && d % 2 == 1) throw Error(ErrorKind::UnsupportedParameterRegion, "d > 13");
  if (path == EvalPath::Elementary) throw Error(ErrorKind::UnsupportedParameterRegion, "no elementary form");
  if (path == EvalPath::Auto && d % 2 == 0) {
    const double sh = std::sinh(0.5 * r);
    if (sh <= 0.5 && std::abs(b) * sh <= 3.0) return hyper_near(d, b, r).value;
  }
  return hyper_complex_d(d, b, r);
}

cplx sphere_unit(int d, cplx b, double r, EvalPath path) {
  if (r > pi * (1.0 + 1e-14)) throw Error(ErrorKind::DomainError, "spherical separation exceeds pi R");
  r = std::min(r, pi);
  const bool small_beta = std::abs(b) < 1e-3;
  if (d == 1 && path != EvalPath::Special && !small_beta) {
    const cplx e1 = std::exp(-b * r), e2 = std::exp(-b * (2.0 * pi - r)), den = 1.0 - std::exp(-2.0 * pi * b);
    return (e1 + e2) / (2.0 * b * den);
  }
  if (r == 0.0) throw Error(ErrorKind::DiagonalSingularity, "kernel is singular at r = 0");
  const double c = std::cos(0.5 * r), s = std::sin(0.5 * r);
  if (path == EvalPath::Auto && c <= 0.3) return sphere_antipodal(d, b, r).value;
  if (d % 2 == 1 && d <= kMaxOddDim && path != EvalPath::Special && !small_beta) {
    const int n = (d - 3) / 2;
    const cplx e1 = std::exp(-b * r), e2 = std::exp(-b * (2.0 * pi - r)), den = 1.0 - std::exp(-2.0 * pi * b);
    const cplx sh = (e1 - e2) / den, ch = (e1 + e2) / den;  // sinh, cosh of b(pi - r) over sinh(pi b)
    const double cr = std::cos(r), sr = std::sin(r);
    cplx sum = 0.0;
    for (const auto& t : sphere_odd_terms(n))
      sum += t.c * std::pow(b, t.a) * std::pow(cr, t.p) / std::pow(sr, t.q) * (t.cosh_type ? ch : sh);
    return sum / (2.0 * std::pow(2.0 * pi, n + 1));
  }
  if (path == EvalPath::Elementary) throw Error(ErrorKind::UnsupportedParameterRegion, "no elementary form");
  if (path == EvalPath::Auto && s <= 0.5 && std::abs(b) * s <= 3.0) return sphere_near(d, b, r).value;
  if (path == EvalPath::Auto && c <= 0.75) return sphere_antipodal(d, b, r).value;
  return sphere_complex_d(d, b, r);
}

}  // namespace detail

namespace {

void check_point(const Geometry& g, int d, const SpectralPoint& s) {
  if (d < 1) throw Error(ErrorKind::DomainError, "dimension must be >= 1");
  if (g.kind != GeometryKind::Spherical && s.boundary == Boundary::None && !(s.beta.real() > 0.0))
    throw Error(ErrorKind::OnSpectrum, "z lies on [0, inf) without a boundary tag");
}

}  // namespace

cplx green_value(const Geometry& g, int d, const SpectralPoint& s, const Separation& sep, EvalPath path) {
  check_point(g, d, s);
  switch (g.kind) {
    case GeometryKind::Euclidean: return detail::euclid_unit(d, s.beta, sep.r, path);
    case GeometryKind::Hyperbolic: {
      const SpectralPoint u = s.scaled(g.R);
      return std::pow(g.R, 2.0 - d) * detail::hyper_unit(d, u.beta, sep.r / g.R, path);
    }
    case GeometryKind::Spherical: {
      const SpectralPoint u = s.scaled(g.R);
      detail::check_sphere_spectrum(d, u.z);
      return std::pow(g.R, 2.0 - d) * detail::sphere_unit(d, u.beta, sep.r / g.R, path);
    }
  }
  return 0.0;
}

cplx green_value_complex_d(GeometryKind kind, cplx d, const SpectralPoint& s, double r) {
  switch (kind) {
    case GeometryKind::Euclidean: return detail::euclid_complex_d(d, s.beta, r);
    case GeometryKind::Hyperbolic: return detail::hyper_complex_d(d, s.beta, r);
    case GeometryKind::Spherical: return detail::sphere_complex_d(d, s.beta, r);
  }
  return 0.0;
}

std::pair<cplx, cplx> symmetry_check(Identity id, cplx d, const SpectralPoint& s, double r, double lambda) {
  const cplx b = s.beta;
  switch (id) {
    case Identity::EuclideanReflection: {
      const cplx lhs = detail::euclid_complex_d(4.0 - d, b, r);
      const cplx rhs = std::pow(b / (2.0 * pi * r), 2.0 - d) * detail::euclid_complex_d(d, b, r);
      return {lhs, rhs};
    }
    case Identity::HyperbolicReflection: {
      const cplx lhs = detail::hyper_complex_d(4.0 - d, b, r);
      const cplx poch = sf::pochhammer(0.5 * (3.0 - d) + b, d - 2.0);
      const cplx rhs = detail::hyper_complex_d(d, b, r) / (poch * std::pow(2.0 * pi * std::sinh(r), 2.0 - d));
      return {lhs, rhs};
    }
    case Identity::Homogeneity: {
      const cplx lhs = detail::euclid_complex_d(d, lambda * b, r / lambda);
      const cplx rhs = std::pow(lambda, d - 2.0) * detail::euclid_complex_d(d, b, r);
      return {lhs, rhs};
    }
  }
  return {0.0, 0.0};
}

}  // namespace pgf
