// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cmath>

#include "pgf/specfun.hpp"

namespace pgf::specfun {

namespace {

// B_2, B_4, ..., B_20
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,      -1.0 / 30.0,          1.0 / 42.0,       -1.0 / 30.0,   5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,           -3617.0 / 510.0,  43867.0 / 798.0, -174611.0 / 330.0};

constexpr double kShift = 15.0;

void check_pole(cplx z, const char* who) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::PoleAtNonPositiveInteger, who);
}

// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  if (std::abs(y) < 8.0) return std::log(std::sin(pi * z));
  if (y > 0) return -I * pi * z + std::log(cplx(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * I * pi * z));
  return I * pi * z + std::log(cplx(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * I * pi * z));
}

cplx cot_pi(cplx z) {
  if (z.imag() > 0) {
    const cplx q = std::exp(2.0 * I * pi * z);
    return I * (q + 1.0) / (q - 1.0);
  }
  const cplx q = std::exp(-2.0 * I * pi * z);
  return I * (1.0 + q) / (1.0 - q);
}

// 1/sin^2(pi z), small for large |Im z| instead of overflowing.
cplx csc2_pi(cplx z) {
  const double y = z.imag();
  if (std::abs(y) < 8.0) {
    const cplx s = std::sin(pi * z);
    return 1.0 / (s * s);
  }
  const cplx q = y > 0 ? std::exp(2.0 * I * pi * z) : std::exp(-2.0 * I * pi * z);
  return -4.0 * q / ((1.0 - q) * (1.0 - q));
}

cplx lgamma_stirling(cplx z) {
  cplx zi = 1.0 / z;
  const cplx zi2 = zi * zi;
  cplx s = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    const double n = 2.0 * (k + 1);
    s += kBernoulli[k] / (n * (n - 1.0)) * zi;
    zi *= zi2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + s;
}

cplx digamma_asym(cplx z) {
  const cplx zi2 = 1.0 / (z * z);
  cplx p = zi2;
  cplx s = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    s += kBernoulli[k] / (2.0 * (k + 1)) * p;
    p *= zi2;
  }
  return std::log(z) - 0.5 / z - s;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cplx polygamma_asym(int n, cplx z) {
  const cplx zi = 1.0 / z;
  cplx s = factorial(n - 1) * std::pow(zi, n) + 0.5 * factorial(n) * std::pow(zi, n + 1);
  cplx p = std::pow(zi, n + 2);
  const cplx zi2 = zi * zi;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const int m = 2 * static_cast<int>(k + 1);
    s += kBernoulli[k] * factorial(m + n - 1) / factorial(m) * p;
    p *= zi2;
  }
  return (n % 2 == 1) ? s : -s;
}

}  // namespace

cplx Scaled::value() const {
  if (mant == cplx(0.0)) return 0.0;
  return std::exp(std::log(mant) + expo);
}

void Scaled::normalize() {
  const double m = std::abs(mant);
  if (m == 0.0 || !std::isfinite(m)) return;
  const double l = std::log(m);
  mant /= m;
  expo += l;
}

Scaled& Scaled::operator*=(const Scaled& o) {
  mant *= o.mant;
  expo += o.expo;
  normalize();
  return *this;
}

Scaled operator*(Scaled a, const Scaled& b) { return a *= b; }

Scaled operator+(const Scaled& a, const Scaled& b) {
  if (a.mant == cplx(0.0)) return b;
  if (b.mant == cplx(0.0)) return a;
  const double e = std::max(a.expo, b.expo);
  Scaled r{a.mant * std::exp(a.expo - e) + b.mant * std::exp(b.expo - e), e};
  r.normalize();
  return r;
}

cplx lgamma(cplx z) {
  check_pole(z, "lgamma");
  if (z.real() < 0.5) return std::log(pi) - log_sin_pi(z) - lgamma(1.0 - z);
  cplx prod = 1.0;
  cplx logprod = 0.0;
  while (z.real() < kShift) {
    prod *= z;
    if (std::abs(prod) > 1e200) {
      logprod += std::log(prod);
      prod = 1.0;
    }
    z += 1.0;
  }
  return lgamma_stirling(z) - logprod - std::log(prod);
}

cplx gamma(cplx z) {
  check_pole(z, "gamma");
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() <= 30.0 && z.real() == std::round(z.real()))
    return factorial(static_cast<int>(z.real()) - 1);
  return std::exp(lgamma(z));
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() <= 30.0 && z.real() == std::round(z.real()))
    return 1.0 / factorial(static_cast<int>(z.real()) - 1);
  return std::exp(-lgamma(z));
}

cplx digamma(cplx z) {
  check_pole(z, "digamma");
  if (z.real() < 0.5) return digamma(1.0 - z) - pi * cot_pi(z);
  cplx acc = 0.0;
  while (z.real() < kShift) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  return acc + digamma_asym(z);
}

cplx polygamma(int n, cplx z) {
  if (n == 0) return digamma(z);
  if (n < 0) throw Error(ErrorKind::DomainError, "polygamma order must be >= 0");
  check_pole(z, "polygamma");
  if (z.real() < 0.5) {
    if (n == 1) return pi * pi * csc2_pi(z) - polygamma(1, 1.0 - z);
    if (n == 2) return polygamma(2, 1.0 - z) - 2.0 * pi * pi * pi * cot_pi(z) * csc2_pi(z);
  }
  // psi^(n)(z) = psi^(n)(z+1) + (-1)^(n+1) n! / z^(n+1)
  const double sgn = (n % 2 == 1) ? 1.0 : -1.0;
  const double nf = factorial(n);
  cplx acc = 0.0;
  while (z.real() < kShift) {
    acc += sgn * nf / std::pow(z, n + 1);
    z += 1.0;
  }
  return acc + polygamma_asym(n, z);
}

cplx gamma_digamma(cplx x, int order) {
  switch (order) {
    case 0: return gamma(x);
    case 1: return digamma(x);
    case 2: return polygamma(1, x);
    case 3: return polygamma(2, x);
    default: throw Error(ErrorKind::DomainError, "gamma_digamma order must be 0..3");
  }
}

cplx pochhammer(cplx a, cplx z) {
  if (is_integer(z) && std::abs(z.real()) <= 4096) {
    const int n = static_cast<int>(z.real());
    cplx p = 1.0;
    if (n >= 0) {
      for (int j = 0; j < n; ++j) p *= a + static_cast<double>(j);
      return p;
    }
    for (int j = 1; j <= -n; ++j) {
      const cplx f = a - static_cast<double>(j);
      if (f == cplx(0.0)) throw Error(ErrorKind::PoleAtNonPositiveInteger, "pochhammer");
      p /= f;
    }
    return p;
  }
  if (is_nonpositive_integer(a + z)) throw Error(ErrorKind::PoleAtNonPositiveInteger, "pochhammer");
  if (is_nonpositive_integer(a)) return 0.0;
  return std::exp(lgamma(a + z) - lgamma(a));
}

cplx harmonic(cplx a, cplx z) {
  if (is_integer(z) && z.real() >= 0 && z.real() <= 4096) {
    const int n = static_cast<int>(z.real());
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) {
      const cplx f = a + static_cast<double>(j);
      if (f == cplx(0.0)) throw Error(ErrorKind::PoleAtNonPositiveInteger, "harmonic");
      s += 1.0 / f;
    }
    return s;
  }
  return digamma(a + z) - digamma(a);
}

}  // namespace pgf::specfun
