// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Even d: Sigma^eps = (A(beta) - 2 eps) P(z) / C with A = ln beta^2,
// psi((3-d)/2 + beta) + psi((d-1)/2 + beta), or psi((d-1)/2 + i beta) + psi((d-1)/2 - i beta).
// Odd d: Sigma = pi g(beta) Q(z) / C with g = beta (beta coth(pi beta) on the
// sphere) and Q a product of (z +- k^2), Q = 1/z for d = 1.

#include "pgf/selfenergy.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "green_internal.hpp"
#include "pgf/specfun.hpp"

namespace pgf {

namespace sf = specfun;

int Polynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0.0) return i;
  return -1;
}

cplx Polynomial::operator()(cplx z) const {
  cplx v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

cplx Polynomial::derivative(cplx z) const {
  cplx v = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) v = v * z + coeffs[i] * static_cast<double>(i);
  return v;
}

Polynomial Polynomial::antiderivative() const {
  Polynomial p{std::vector<double>(coeffs.size() + 1, 0.0)};
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.coeffs[i + 1] = coeffs[i] / static_cast<double>(i + 1);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial p{std::vector<double>(std::max(a.coeffs.size(), b.coeffs.size()), 0.0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) p.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) p.coeffs[i] += b.coeffs[i];
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial p{std::vector<double>(a.coeffs.size() + b.coeffs.size() - 1, 0.0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return p;
}

Polynomial operator*(double c, const Polynomial& a) {
  Polynomial p = a;
  for (auto& x : p.coeffs) x *= c;
  return p;
}

void SelfEnergySpec::validate() const {
  if (d < 1) throw Error(ErrorKind::DomainError, "dimension must be >= 1");
  const bool odd = d % 2 == 1;
  switch (flavor) {
    case Flavor::Reference:
      if (!odd) throw Error(ErrorKind::UnsupportedFlavor, "even dimensions need the eps family or minimal subtraction");
      break;
    case Flavor::ReferenceEps:
      if (odd) throw Error(ErrorKind::UnsupportedFlavor, "the eps family exists for even dimensions only");
      break;
    case Flavor::MinimalSubtraction:
      if (odd || d < 4) throw Error(ErrorKind::UnsupportedFlavor, "minimal subtraction needs even d >= 4");
      break;
  }
}

double self_energy_normalization(int d) { return std::pow(4.0 * pi, 0.5 * d) * std::tgamma(0.5 * d); }

namespace {

double c_of(int d) { return self_energy_normalization(d); }

Polynomial linear(double c0) { return {{c0, 1.0}}; }

// coth(pi b), csch^2(pi b), saturated where they would overflow
cplx coth_pi(cplx b) {
  const cplx x = pi * b;
  if (x.real() > 30.0) return 1.0;
  if (x.real() < -30.0) return -1.0;
  return 1.0 / std::tanh(x);
}

cplx csch2_pi(cplx b) {
  const cplx x = pi * b;
  if (std::abs(x.real()) > 30.0) return 4.0 * std::exp(-2.0 * (x.real() > 0 ? x : -x));
  const cplx sh = std::sinh(x);
  return 1.0 / (sh * sh);
}

// Q(z) of the odd-d product: prod_{k=1}^{(d-3)/2} (z + sign k^2)
Polynomial odd_product(int d, double sign) {
  Polynomial p{{1.0}};
  for (int k = 1; k <= (d - 3) / 2; ++k) p = p * linear(sign * k * k);
  return p;
}

// Value of f at beta through the Cauchy formula on a circle around b0, for the
// removable singularities of the hyperbolic even-d expressions at beta = 1/2 + j.
template <class F>
cplx across_removable(F&& f, cplx beta, int d) {
  for (int j = 0; j <= (d - 4) / 2; ++j) {
    const double b0 = 0.5 + j;
    if (std::abs(beta - b0) >= 0.1) continue;
    constexpr int kNodes = 48;
    constexpr double radius = 0.3;
    cplx acc = 0.0;
    for (int k = 0; k < kNodes; ++k) {
      const cplx u = radius * std::exp(I * (2.0 * pi * (k + 0.5) / kNodes));
      acc += f(b0 + u) * u / (u - (beta - b0));
    }
    return acc / static_cast<double>(kNodes);
  }
  return f(beta);
}

struct EvenParts {
  cplx A;    // logarithmic-digamma part
  cplx A_z;  // dA/dz
};

EvenParts even_parts(GeometryKind kind, int d, cplx b) {
  const double dd = d;
  switch (kind) {
    case GeometryKind::Euclidean:
      return {2.0 * std::log(b), -1.0 / (b * b)};
    case GeometryKind::Hyperbolic: {
      const cplx y1 = 0.5 * (3.0 - dd) + b, y2 = 0.5 * (dd - 1.0) + b;
      return {sf::digamma(y1) + sf::digamma(y2), -(sf::polygamma(1, y1) + sf::polygamma(1, y2)) / (2.0 * b)};
    }
    case GeometryKind::Spherical: {
      const double a = 0.5 * (dd - 1.0);
      const cplx yp = a + I * b, ym = a - I * b;
      return {sf::digamma(yp) + sf::digamma(ym), -I * (sf::polygamma(1, yp) - sf::polygamma(1, ym)) / (2.0 * b)};
    }
  }
  return {};
}

// Constant replacing 2 eps in the minimal-subtraction flavor.
double ms_constant(GeometryKind kind, int d) {
  if (kind == GeometryKind::Euclidean) return 2.0 * sf::digamma(0.5 * d).real() - 2.0 + std::log(4.0);
  return std::log(4.0);
}

// Unit-radius Sigma and sigma.
struct SigmaPair {
  cplx Sigma;
  cplx sigma;
};

SigmaPair odd_unit(GeometryKind kind, int d, cplx b) {
  const cplx z = -b * b;
  const double c = pi / c_of(d);
  cplx g = b, g_b = 1.0;
  if (kind == GeometryKind::Spherical) {
    const cplx ct = coth_pi(b);
    g = b * ct;
    g_b = ct - pi * b * csch2_pi(b);
  }
  cplx q, q_z;
  if (d == 1) {
    q = 1.0 / z;
    q_z = -1.0 / (z * z);
  } else {
    // Euclidean: z^{(d-3)/2}
    const double sign = kind == GeometryKind::Spherical ? -1.0 : kind == GeometryKind::Hyperbolic ? 1.0 : 0.0;
    const Polynomial p = odd_product(d, sign);
    q = p(z);
    q_z = p.derivative(z);
  }
  const cplx g_z = -g_b / (2.0 * b);
  return {c * g * q, -c * (g_z * q + g * q_z)};
}

SigmaPair even_unit(GeometryKind kind, int d, cplx b, double two_eps, bool ms) {
  auto eval = [&](cplx beta) -> SigmaPair {
    const cplx z = -beta * beta;
    const Polynomial P = eps_polynomial(kind, d);
    const EvenParts e = even_parts(kind, d, beta);
    const double k = ms ? ms_constant(kind, d) : two_eps;
    cplx S = (e.A - k) * P(z);
    cplx s = -(e.A_z * P(z) + (e.A - k) * P.derivative(z));
    if (ms && kind != GeometryKind::Euclidean) {
      S += ms_correction(kind, d)(z);
      s += ms_correction_density(kind, d)(z);
    }
    const double c = c_of(d);
    return {S / c, s / c};
  };
  if (kind != GeometryKind::Hyperbolic || d < 4) return eval(b);
  return {across_removable([&](cplx x) { return eval(x).Sigma; }, b, d),
          across_removable([&](cplx x) { return eval(x).sigma; }, b, d)};
}

SigmaPair unit_pair(const SelfEnergySpec& spec, cplx b) {
  const GeometryKind kind = spec.geometry.kind;
  if (spec.d % 2 == 1) return odd_unit(kind, spec.d, b);
  return even_unit(kind, spec.d, b, 2.0 * spec.epsilon, spec.flavor == Flavor::MinimalSubtraction);
}

void check_point(const Geometry& g, int d, const SpectralPoint& u) {
  if (g.kind == GeometryKind::Spherical) {
    detail::check_sphere_spectrum(d, u.z);
  } else if (u.boundary == Boundary::None && !(u.beta.real() > 0.0)) {
    throw Error(ErrorKind::OnSpectrum, "z lies on [0, inf) without a boundary tag");
  }
}

// Radius-R pair from the unit-radius one; even d carries the ln R shift.
SigmaPair scaled_pair(const SelfEnergySpec& spec, double R, const SpectralPoint& s) {
  spec.validate();
  const Geometry& g = spec.geometry;
  const int d = spec.d;
  if (!(R > 0.0)) throw Error(ErrorKind::DomainError, "radius must be positive");
  const SpectralPoint u = s.scaled(R);
  check_point(g, d, u);
  SigmaPair p = unit_pair(spec, u.beta);
  if (d % 2 == 0 && R != 1.0) {
    const Polynomial P = eps_polynomial(g.kind, d);
    const double lr = std::log(R), c = c_of(d);
    p.Sigma -= 2.0 * lr * P(u.z) / c;
    p.sigma += 2.0 * lr * P.derivative(u.z) / c;
  }
  return {std::pow(R, 2.0 - d) * p.Sigma, std::pow(R, 4.0 - d) * p.sigma};
}

double radius_of(const Geometry& g) { return g.kind == GeometryKind::Euclidean ? 1.0 : g.R; }

}  // namespace

Polynomial eps_polynomial(GeometryKind kind, int d) {
  if (d % 2 == 1) throw Error(ErrorKind::DomainError, "eps polynomial exists for even d only");
  Polynomial p{{1.0}};
  for (int j = 0; j <= (d - 4) / 2; ++j) {
    const double c = (0.5 + j) * (0.5 + j);
    switch (kind) {
      case GeometryKind::Euclidean: p = p * Polynomial{{0.0, 1.0}}; break;
      case GeometryKind::Hyperbolic: p = p * linear(c); break;
      case GeometryKind::Spherical: p = p * linear(-c); break;
    }
  }
  return p;
}

Polynomial ms_correction_density(GeometryKind kind, int d) {
  if (d % 2 == 1 || d < 4 || kind == GeometryKind::Euclidean)
    throw Error(ErrorKind::DomainError, "correction polynomial needs a curved geometry and even d >= 4");
  const int top = (d - 4) / 2;
  const double sign = kind == GeometryKind::Hyperbolic ? 1.0 : -1.0;
  auto factor = [&](int j) { return linear(sign * (0.5 + j) * (0.5 + j)); };
  auto product_except = [&](int k, int l) {
    Polynomial p{{1.0}};
    for (int j = 0; j <= top; ++j)
      if (j != k && j != l) p = p * factor(j);
    return p;
  };
  Polynomial out{{0.0}};
  for (int k = 0; k <= top; ++k) {
    const double a = (sf::digamma(0.5 * (d - 2) - k) + sf::digamma(1.0 + k)).real();
    out = out + a * product_except(k, -1);
    for (int l = k + 1; l <= top; ++l) out = out + (sign * (2.0 * l + 1.0)) * product_except(k, l);
  }
  return out;
}

Polynomial ms_correction(GeometryKind kind, int d) { return -1.0 * ms_correction_density(kind, d).antiderivative(); }

cplx sigma_density(const SelfEnergySpec& spec, const SpectralPoint& s) {
  return scaled_pair(spec, radius_of(spec.geometry), s).sigma;
}

cplx reference_sigma(const SelfEnergySpec& spec, const SpectralPoint& s) {
  return scaled_pair(spec, radius_of(spec.geometry), s).Sigma;
}

cplx scaled_sigma(const SelfEnergySpec& spec, double R, const SpectralPoint& s) { return scaled_pair(spec, R, s).Sigma; }

cplx ms_sigma_even(GeometryKind kind, int d, const SpectralPoint& s) {
  Geometry g{kind, 1.0};
  return reference_sigma({g, d, Flavor::MinimalSubtraction, 0.0}, s);
}

cplx anomalous_sigma(GeometryKind kind, int d, const SpectralPoint& s) {
  if (d % 2 == 1 || d < 4 || kind == GeometryKind::Euclidean)
    throw Error(ErrorKind::DomainError, "anomalous closed form needs a curved geometry and even d >= 4");
  check_point({kind, 1.0}, d, s);
  const double dd = d, m = 0.5 * (dd - 2.0), l4 = std::log(4.0);
  const double sign = (d / 2 - 1) % 2 ? -1.0 : 1.0;
  const double c = c_of(d);
  auto harm = [&](cplx a) { return sf::digamma(a + m) - sf::digamma(a); };
  if (kind == GeometryKind::Hyperbolic) {
    auto f = [&](cplx b) {
      const cplx y1 = 0.5 * (3.0 - dd) + b, y2 = 0.5 * (dd - 1.0) + b;
      cplx bracket = (sf::polygamma(1, y1) + sf::polygamma(1, y2)) / (2.0 * b) +
                     (harm(0.5 - b) - harm(0.5 + b)) / (2.0 * b) * l4;
      for (int k = 0; k <= (d - 4) / 2; ++k)
        bracket += (sf::digamma(1.5 + k + b) + sf::digamma(-0.5 - k + b) - sf::digamma(m - k) - sf::digamma(1.0 + k)) /
                   (b * b - (0.5 + k) * (0.5 + k));
      return sign * sf::pochhammer(y1, dd - 2.0) / c * bracket;
    };
    return across_removable(f, s.beta, d);
  }
  const cplx b = s.beta, ib = I * b;
  const double a = 0.5 * (dd - 1.0);
  cplx bracket = I / (2.0 * b) * (sf::polygamma(1, a + ib) - sf::polygamma(1, a - ib)) -
                 I / (2.0 * b) * (harm(0.5 + ib) - harm(0.5 - ib)) * l4;
  for (int k = 0; k <= (d - 4) / 2; ++k)
    bracket += (sf::digamma(-0.5 - k + ib) + sf::digamma(-0.5 - k - ib) - sf::digamma(m - k) - sf::digamma(1.0 + k)) /
               ((0.5 + k) * (0.5 + k) + b * b);
  const double sgn = (d / 2 - 1) % 2 ? -1.0 : 1.0;
  return sgn * sf::pochhammer(0.5 + ib, m) * sf::pochhammer(0.5 - ib, m) / c * bracket;
}

cplx sigma_quadrature(const Geometry& g, int d, const SpectralPoint& s) {
  if (d < 1 || d > 3) throw Error(ErrorKind::DomainError, "direct quadrature of G^2 converges for d <= 3 only");
  const double R = radius_of(g);
  const SpectralPoint u = s.scaled(R);
  check_point(g, d, u);
  if (g.kind != GeometryKind::Spherical && !(u.beta.real() > 0.0))
    throw Error(ErrorKind::DomainError, "G^2 is not integrable on the continuous spectrum");
  const double area = 2.0 * std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d);  // |S^{d-1}|
  auto integrand = [&](double r) -> cplx {
    // [0, 1e-12] contributes below rounding for d <= 3
    if (d > 1 && r < 1e-12) return 0.0;
    cplx G;
    double jac;
    switch (g.kind) {
      case GeometryKind::Euclidean:
        G = detail::euclid_unit(d, u.beta, r, EvalPath::Auto);
        jac = std::pow(r, d - 1);
        break;
      case GeometryKind::Hyperbolic:
        G = detail::hyper_unit(d, u.beta, r, EvalPath::Auto);
        jac = std::pow(std::sinh(r), d - 1);
        break;
      default:
        G = detail::sphere_unit(d, u.beta, std::min(r, pi), EvalPath::Auto);
        jac = std::pow(std::sin(r), d - 1);
        break;
    }
    const cplx v = G * G * jac;
    // far tails underflow to 0 * inf
    if (!std::isfinite(v.real()) && r > 20.0) return 0.0;
    return v;
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0.0;
  cplx v;
  if (g.kind == GeometryKind::Spherical) {
    v = ts.integrate(integrand, 0.0, pi, 1e-13, &err);
  } else {
    boost::math::quadrature::exp_sinh<double> es;
    v = ts.integrate(integrand, 0.0, 1.0, 1e-13, &err);
    double e2 = 0.0;
    v += es.integrate([&](double r) { return integrand(1.0 + r); }, 1e-13, &e2);
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::QuadratureFailure, "non-finite integral of G^2");
  return area * std::pow(R, 4.0 - d) * v;
}

}  // namespace pgf
