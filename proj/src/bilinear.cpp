// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <vector>

#include "pgf/genint.hpp"
#include "pgf/specfun.hpp"

namespace pgf::genint {

namespace {

using specfun::digamma;
using specfun::harmonic;
using specfun::pochhammer;
using specfun::polygamma;
using specfun::rgamma;

using Series = std::vector<cplx>;  // truncated Taylor coefficients in t

Series mul(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// (1 + c t)^p
Series binomial(cplx p, double c, std::size_t n) {
  Series s(n, 0.0);
  cplx coef = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = coef;
    coef *= (p - static_cast<double>(j)) / static_cast<double>(j + 1) * c;
  }
  return s;
}

// Number of terms of the singular Frobenius series that can reach t^{-1}.
int singular_count(cplx alpha) {
  if (is_integer(alpha)) return std::max(0, static_cast<int>(alpha.real()));
  if (alpha.real() <= 0.0) return 0;
  return static_cast<int>(std::ceil(alpha.real())) + 1;
}

void add_term(std::vector<ExpansionTerm>& terms, cplx k, cplx c) {
  for (auto& t : terms)
    if (std::abs(t.k - k) < 1e-12) {
      t.coeff += c;
      return;
    }
  terms.push_back({k, c});
}

// t^{-alpha} g(t) with g given by its Taylor coefficients.
std::vector<ExpansionTerm> shifted_terms(cplx alpha, const Series& g) {
  std::vector<ExpansionTerm> terms;
  for (std::size_t j = 0; j < g.size(); ++j) add_term(terms, -alpha + static_cast<double>(j), g[j]);
  return terms;
}

cplx kk_closed(cplx a, cplx b) {
  if (b.real() <= 0.0) throw Error(ErrorKind::UnsupportedParameterRegion, "KK needs Re b > 0");
  const cplx b2 = b * b;
  if (is_integer(a)) {
    const double n = std::abs(a.real());
    const double sign = static_cast<int>(n) % 2 == 0 ? 1.0 : -1.0;
    return sign / b2 * (1.0 + n * 2.0 * std::log(0.5 * b) + 2.0 * n * (1.0 - digamma(1.0 + n)));
  }
  return pi * a / (b2 * std::sin(pi * a));
}

cplx zz_closed(cplx a, cplx l) {
  if (l.real() <= 0.0) throw Error(ErrorKind::UnsupportedParameterRegion, "ZZ needs Re lambda > 0");
  const cplx p2 = std::pow(2.0, 2.0 * l);
  if (a == cplx(0.0))
    return 2.0 * p2 * polygamma(1, 0.5 + l) * rgamma(0.5 + l) * rgamma(0.5 + l) / (pi * l);
  if (is_integer(a)) {
    const int n = static_cast<int>(std::abs(a.real()));
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    cplx bracket = (polygamma(1, 0.5 - a + l) + polygamma(1, 0.5 + a + l)) / (2.0 * l) +
                   (harmonic(0.5 - l, n) - harmonic(0.5 + l, n)) / (2.0 * l) * std::log(4.0);
    for (int k = 0; k < n; ++k) {
      const double kd = k;
      bracket += (digamma(1.5 + kd + l) + digamma(-0.5 - kd + l) - digamma(static_cast<double>(n - k)) -
                  digamma(1.0 + kd)) /
                 (l * l - (0.5 + kd) * (0.5 + kd));
    }
    return sign * 2.0 * p2 * rgamma(0.5 - a + l) * rgamma(0.5 + a + l) / pi * bracket;
  }
  return p2 * (digamma(0.5 + a + l) - digamma(0.5 - a + l)) * rgamma(0.5 - a + l) * rgamma(0.5 + a + l) /
         (l * std::sin(pi * a));
}

cplx ss_closed(cplx a, cplx beta) {
  if (a.real() <= -1.0) throw Error(ErrorKind::UnsupportedParameterRegion, "SS needs Re alpha > -1");
  const cplx ib = I * beta;
  const cplx p2 = std::pow(2.0, 2.0 * a);
  const bool zero = beta == cplx(0.0);
  if (!is_integer(a)) {
    if (zero)
      return 2.0 * p2 * (pi * pi - 2.0 * polygamma(1, 0.5 + a)) * rgamma(0.5 + a) * rgamma(0.5 + a) /
             std::sin(pi * a);
    return 2.0 * p2 * I * std::cosh(pi * beta) * rgamma(0.5 + a - ib) * rgamma(0.5 + a + ib) /
           (beta * std::sin(pi * a)) *
           (digamma(0.5 + a + ib) - digamma(0.5 + a - ib) + digamma(0.5 - ib) - digamma(0.5 + ib));
  }
  const int n = static_cast<int>(a.real());
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  const double ln4 = std::log(4.0);
  if (zero) {
    cplx bracket = -polygamma(2, 0.5 + a) + (polygamma(1, 0.5 + a) - polygamma(1, 0.5)) * ln4;
    for (int k = 0; k < n; ++k) {
      const double kd = k;
      bracket += (2.0 * digamma(-0.5 - kd) - digamma(static_cast<double>(n - k)) - digamma(1.0 + kd)) /
                 ((0.5 + kd) * (0.5 + kd));
    }
    return sign * 4.0 * p2 * rgamma(0.5 + a) * rgamma(0.5 + a) / pi * bracket;
  }
  const cplx h = I / (2.0 * beta);
  cplx bracket = h * (polygamma(1, 0.5 + a + ib) - polygamma(1, 0.5 + a - ib)) -
                 h * (harmonic(0.5 + ib, n) - harmonic(0.5 - ib, n)) * ln4;
  for (int k = 0; k < n; ++k) {
    const double kd = k;
    bracket += (digamma(-0.5 - kd + ib) + digamma(-0.5 - kd - ib) - digamma(static_cast<double>(n - k)) -
                digamma(1.0 + kd)) /
               ((0.5 + kd) * (0.5 + kd) + beta * beta);
  }
  return sign * 4.0 * p2 * std::cosh(pi * beta) * rgamma(0.5 + a + ib) * rgamma(0.5 + a - ib) / pi * bracket;
}

SingularExpansion kk_expansion(cplx a, cplx b) {
  if (a.real() < 0.0) a = -a;
  const int n = singular_count(a);
  // K_a(x) = 1/2 sum_j (-1)^j Gamma(a-j)/j! (x/2)^{2j-a} + less singular terms
  std::vector<cplx> c(n);
  for (int j = 0; j < n; ++j)
    c[j] = 0.5 * (j % 2 == 0 ? 1.0 : -1.0) * specfun::gamma(a - static_cast<double>(j)) * rgamma(j + 1.0);
  SingularExpansion e{0.0, {}, Side::Left};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx p = static_cast<double>(2 * i + 2 * j) - 2.0 * a;
      add_term(e.terms, p + 1.0, 2.0 * c[i] * c[j] * std::pow(0.5 * b, p));
    }
  return e;
}

SingularExpansion zz_expansion(cplx a, cplx l) {
  // the integrand is even in alpha
  if (a.real() < 0.0) a = -a;
  const int n = singular_count(a);
  SingularExpansion e{2.0, {}, Side::Left};
  if (n == 0) return e;
  const std::size_t order = static_cast<std::size_t>(std::ceil(a.real())) + 1;
  // singular part of Z: (w-1)^{-a} (w+1)^{-1/2-l} P sum_j c_j y^j, y = (w-1)/(w+1); t = 2w - 2
  const cplx P = std::pow(2.0, 2.0 * l) * specfun::gamma(a) * rgamma(0.5 + l + a) / std::sqrt(pi);
  Series y(order, 0.0);
  for (std::size_t j = 1; j < order; ++j) y[j] = (j % 2 == 1 ? 1.0 : -1.0) * std::pow(0.25, static_cast<double>(j));
  Series sum(order, 0.0), yj(order, 0.0);
  yj[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    const double jd = j;
    const cplx cj = pochhammer(0.5 + l, jd) * pochhammer(0.5 + l - a, jd) * rgamma(jd + 1.0) / pochhammer(1.0 - a, jd);
    for (std::size_t i = 0; i < order; ++i) sum[i] += cj * yj[i];
    yj = mul(yj, y);
  }
  Series g = mul(mul(sum, sum), binomial(a - 1.0 - 2.0 * l, 0.25, order));
  const cplx pre = std::pow(2.0, 2.0 * a - 1.0 - 2.0 * l) * P * P;
  for (auto& v : g) v *= pre;
  e.terms = shifted_terms(a, g);
  return e;
}

SingularExpansion ss_expansion(cplx a, cplx beta) {
  const int n = singular_count(a);
  SingularExpansion e{-2.0, {}, Side::Left};
  if (n == 0) return e;
  const std::size_t order = static_cast<std::size_t>(std::ceil(a.real())) + 1;
  const cplx l = I * beta;
  // singular part of S at w = -1: Q ((1+w)/2)^{-a} sum_j d_j ((1+w)/2)^j; t = 2w + 2
  const cplx Q = specfun::gamma(a) * rgamma(0.5 + a + l) * rgamma(0.5 + a - l);
  Series D(order, 0.0);
  for (int j = 0; j < n && static_cast<std::size_t>(j) < order; ++j) {
    const double jd = j;
    D[j] = pochhammer(0.5 - l, jd) * pochhammer(0.5 + l, jd) * rgamma(jd + 1.0) / pochhammer(1.0 - a, jd) *
           std::pow(0.25, jd);
  }
  Series g = mul(mul(D, D), binomial(a, -0.25, order));
  const cplx pre = std::pow(4.0, 2.0 * a) * Q * Q;
  for (auto& v : g) v *= pre;
  e.terms = shifted_terms(a, g);
  return e;
}

}  // namespace

cplx bilinear_catalog(Family family, cplx alpha, cplx aux) {
  switch (family) {
    case Family::KK: return kk_closed(alpha, aux);
    case Family::SS: return ss_closed(alpha, aux);
    case Family::ZZ: return zz_closed(alpha, aux);
  }
  return 0.0;
}

SingularExpansion bilinear_expansion(Family family, cplx alpha, cplx aux) {
  switch (family) {
    case Family::KK: return kk_expansion(alpha, aux);
    case Family::SS: return ss_expansion(alpha, aux);
    case Family::ZZ: return zz_expansion(alpha, aux);
  }
  return {};
}

GenIntegralResult bilinear_literal(Family family, cplx alpha, cplx aux) {
  const SingularExpansion e = bilinear_expansion(family, alpha, aux);
  switch (family) {
    case Family::KK: {
      if (aux.real() <= 0.0) throw Error(ErrorKind::UnsupportedParameterRegion, "KK needs Re b > 0");
      auto f = [=](double r) {
        const cplx k = specfun::bessel_k(alpha, aux * r);
        return 2.0 * r * k * k;
      };
      return gen_integral(f, e, {TailHint::Kind::Exponential, 0.0, 1.0 / aux.real()});
    }
    case Family::SS: {
      if (alpha.real() <= -1.0) throw Error(ErrorKind::UnsupportedParameterRegion, "SS needs Re alpha > -1");
      const specfun::GegenbauerParams p{alpha, I * aux};
      auto f = [=](double u) {
        const double w = 0.5 * u;
        const cplx s = specfun::gegenbauer_S(p, w);
        return s * s * std::pow(cplx(1.0 - w * w), alpha);
      };
      return gen_integral(f, e, {TailHint::Kind::Finite, 2.0, 1.0});
    }
    case Family::ZZ: {
      if (aux.real() <= 0.0) throw Error(ErrorKind::UnsupportedParameterRegion, "ZZ needs Re lambda > 0");
      const specfun::GegenbauerParams p{alpha, aux};
      auto f = [=](double u) {
        const double w = 0.5 * u;
        const cplx z = specfun::gegenbauer_Z(p, w);
        return z * z * std::pow(cplx(w * w - 1.0), alpha);
      };
      return gen_integral(f, e, {TailHint::Kind::Power, 0.0, 1.0});
    }
  }
  return {};
}

}  // namespace pgf::genint
