// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgf/core.hpp"

namespace pgf::specfun {

// value = mant * exp(expo); keeps huge or tiny intermediates representable.
struct Scaled {
  cplx mant{0.0, 0.0};
  double expo = 0.0;

  cplx value() const;
  cplx log() const { return std::log(mant) + expo; }
  static Scaled from_log(cplx lg) { return {std::exp(cplx(0.0, lg.imag())), lg.real()}; }
  Scaled& operator*=(const Scaled& o);
  Scaled& operator*=(cplx c) { mant *= c; return *this; }
  void normalize();
};

Scaled operator*(Scaled a, const Scaled& b);
Scaled operator+(const Scaled& a, const Scaled& b);

// Gamma family. Throws PoleAtNonPositiveInteger at the poles.
cplx lgamma(cplx z);  // any branch of log Gamma; exp(lgamma) = Gamma
cplx gamma(cplx z);
cplx rgamma(cplx z);  // 1/Gamma, entire
cplx digamma(cplx z);
cplx polygamma(int n, cplx z);

// order 0 -> Gamma, 1 -> psi, 2 -> psi', 3 -> psi''.
cplx gamma_digamma(cplx x, int order);

cplx pochhammer(cplx a, cplx z);
cplx harmonic(cplx a, cplx z);  // H_z(a) = psi(a+z) - psi(a)

// Gauss hypergeometric in Olver's normalization, sum (a)_j (b)_j / (Gamma(c+j) j!) w^j.
cplx hyp2f1_olver(cplx a, cplx b, cplx c, cplx w);
Scaled hyp2f1_olver_scaled(cplx a, cplx b, cplx c, cplx w);
// Ordinary normalization, F(a,b;c;0) = 1.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx w);

enum class BesselKind { I, K, J, HPlus, HMinus };

cplx bessel(BesselKind kind, cplx alpha, cplx x);
cplx bessel_i(cplx alpha, cplx x);
cplx bessel_k(cplx alpha, cplx x);
cplx bessel_k_scaled(cplx alpha, cplx x);  // e^x K_alpha(x)
cplx bessel_j(cplx alpha, cplx x);
cplx hankel_plus(cplx alpha, cplx x);
cplx hankel_minus(cplx alpha, cplx x);

struct GegenbauerParams {
  cplx alpha;
  cplx lambda;
};

// S is normalized at w = 1, Z at w = infinity.
cplx gegenbauer_S(const GegenbauerParams& p, cplx w);
cplx gegenbauer_Z(const GegenbauerParams& p, cplx w);
Scaled gegenbauer_S_scaled(const GegenbauerParams& p, cplx w);
Scaled gegenbauer_Z_scaled(const GegenbauerParams& p, cplx w);

// Gegenbauer polynomial C_n^mu(w) by the three-term recurrence.
cplx gegenbauer_C(int n, cplx mu, cplx w);

// (w^2 - 1)^a with the product of principal branches (w-1)^a (w+1)^a.
cplx bullet_pow(cplx w, cplx a);

}  // namespace pgf::specfun
