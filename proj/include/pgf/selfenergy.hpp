// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Self-energy densities sigma(z) = int G(z; x0, x)^2 dx (generalized where the
// integral diverges) and the self-energies Sigma with -dSigma/dz = sigma.

#pragma once

#include <vector>

#include "pgf/green.hpp"

namespace pgf {

// Real polynomial, coefficients ascending in z.
struct Polynomial {
  std::vector<double> coeffs;

  int degree() const;  // -1 for the zero polynomial
  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  Polynomial antiderivative() const;  // vanishing at 0
  bool is_zero() const { return degree() < 0; }
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double c, const Polynomial& a);

enum class Flavor {
  Reference,          // odd d
  ReferenceEps,       // even d, Sigma^eps
  MinimalSubtraction  // even d >= 4
};

struct SelfEnergySpec {
  Geometry geometry;
  int d = 3;
  Flavor flavor = Flavor::Reference;
  double epsilon = 0.0;  // ReferenceEps only

  void validate() const;  // throws UnsupportedFlavor
};

// -dSigma/dz for the chosen flavor; for MinimalSubtraction and odd d this is
// the (generalized, anomalous for even d) integral of G^2.
cplx sigma_density(const SelfEnergySpec& spec, const SpectralPoint& s);

// Direct quadrature of |S^{d-1}| int G(r)^2 J(r) dr, d in {1, 2, 3}.
cplx sigma_quadrature(const Geometry& g, int d, const SpectralPoint& s);

// Sigma; a geometry radius R != 1 applies the radius-R scaling of scaled_sigma.
cplx reference_sigma(const SelfEnergySpec& spec, const SpectralPoint& s);

cplx ms_sigma_even(GeometryKind kind, int d, const SpectralPoint& s);

// Closed form of the anomalous generalized integral of G^2 for even d >= 4,
// hyperbolic or spherical, unit radius; equals the minimal-subtraction density.
cplx anomalous_sigma(GeometryKind kind, int d, const SpectralPoint& s);

// Odd d: R^{2-d} Sigma(R^2 z). Even d: R^{2-d} Sigma^{eps + ln R}(R^2 z); the
// minimal-subtraction flavor gets the same ln R shift of its ln 4 constant.
cplx scaled_sigma(const SelfEnergySpec& spec, double R, const SpectralPoint& s);

// Correction polynomial Pi_d (hyperbolic or spherical, even d >= 4), Pi_d(0) = 0,
// and its negative derivative pi_d.
Polynomial ms_correction(GeometryKind kind, int d);
Polynomial ms_correction_density(GeometryKind kind, int d);

// Polynomial P(z) multiplying -2 eps / C in Sigma^eps, C = (4 pi)^{d/2} Gamma(d/2).
Polynomial eps_polynomial(GeometryKind kind, int d);

double self_energy_normalization(int d);  // C

}  // namespace pgf
