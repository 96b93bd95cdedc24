// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Unperturbed Green's functions of the shifted Laplacian on R^d, H^d_R and
// S^d_R, with near-diagonal and far-field series and spectral projections.

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "pgf/core.hpp"

namespace pgf {

enum class GeometryKind { Euclidean, Hyperbolic, Spherical };

struct Geometry {
  GeometryKind kind = GeometryKind::Euclidean;
  double R = 1.0;  // curvature radius; ignored for Euclidean

  static Geometry euclidean() { return {GeometryKind::Euclidean, 1.0}; }
  static Geometry hyperbolic(double R = 1.0);
  static Geometry spherical(double R = 1.0);
};

const char* to_string(GeometryKind k) noexcept;

// Boundary-value tag for z = zeta^2 +- i0.
enum class Boundary { None, PlusI0, MinusI0 };

// z = -beta^2. Off the real half-line beta is the principal root with
// Re beta > 0; boundary values carry beta = -+ i zeta.
struct SpectralPoint {
  cplx z;
  cplx beta;
  Boundary boundary = Boundary::None;

  static SpectralPoint from_z(cplx z);
  static SpectralPoint from_beta(cplx beta);
  static SpectralPoint boundary_value(double zeta, Boundary side);

  SpectralPoint scaled(double R) const;  // z -> R^2 z
};

// Geodesic distance; for d = 1 optionally the two signed coordinates (or
// angles on the circle) the distance was formed from.
struct Separation {
  double r = 0.0;
  std::optional<std::array<double, 2>> coords;

  static Separation distance(double r);
  static Separation on_line(double x, double xp);
  static Separation on_circle(double theta, double thetap, double R = 1.0);

  // cosh(r/R) for hyperbolic, -cos(r/R) for spherical, r for Euclidean.
  double chord(const Geometry& g) const;
};

enum class EvalPath { Auto, Elementary, Special };

// G(z; x, x') as a function of the separation. Curved geometries of radius R
// use R^{2-d} G_d(R^2 z; r/R).
cplx green_value(const Geometry& g, int d, const SpectralPoint& s, const Separation& sep,
                 EvalPath path = EvalPath::Auto);

// Unit-radius kernel for complex dimension (Euclidean and hyperbolic).
cplx green_value_complex_d(GeometryKind kind, cplx d, const SpectralPoint& s, double r);

enum class Regime { NearDiagonal, FarField };

struct SeriesValue {
  cplx value;
  double truncation_error = 0.0;
};

SeriesValue green_series(const Geometry& g, int d, const SpectralPoint& s, const Separation& sep, Regime regime);

enum class Identity {
  EuclideanReflection,   // G_{4-d} = (beta/(2 pi r))^{2-d} G_d
  HyperbolicReflection,  // G^h_{4-d} = G^h_d / (((3-d)/2 + beta)_{d-2} (2 pi sinh r)^{2-d})
  Homogeneity,           // G_d(-(lambda beta)^2, r/lambda) = lambda^{d-2} G_d(-beta^2, r)
};

// (lhs, rhs) of the identity; lambda is used by Homogeneity only.
std::pair<cplx, cplx> symmetry_check(Identity id, cplx d, const SpectralPoint& s, double r, double lambda = 2.0);

struct SpectralInterval {
  double a = 0.0;
  double b = 0.0;
};
struct SphereLevel {
  int l = 0;
};
using Band = std::variant<SpectralInterval, SphereLevel>;

// Kernel of the spectral projection. Euclidean and hyperbolic take an
// interval; the sphere takes a level or an interval (sum over the levels in [a, b)).
double projection_kernel(const Geometry& g, int d, const Band& band, const Separation& sep);

// |S^d| = 2 pi^{(d+1)/2} / Gamma((d+1)/2)
double sphere_area(int d);

}  // namespace pgf
