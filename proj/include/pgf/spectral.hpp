// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Spectral analysis on the sphere S^d_R: eigenvalues, poles of perturbed
// Green's functions, shifted-eigenvalue asymptotics, residue ranks, and the
// flat-limit driver for both curved geometries.

#pragma once

#include <vector>

#include "pgf/perturbed.hpp"

namespace pgf {

struct Level {
  double eigenvalue = 0.0;  // omega^2 / R^2, omega = l + (d-1)/2
  long long multiplicity = 0;
};

Level unperturbed_spectrum(int d, double R, int l);

double sphere_omega(int d, int l);

struct PoleRecord {
  enum class Source { Shifted, Exceptional, BoundState, OffAxis };

  cplx z;  // pole position
  cplx t;  // beta R = i t, so z = t^2 / R^2
  Source source = Source::Shifted;
  int index = 0;  // l for Shifted, j for Exceptional, running count otherwise
  double refine_residual = 0.0;  // |f| relative to the size of its two terms
};

const char* to_string(PoleRecord::Source s) noexcept;

struct PoleOptions {
  double tolerance = 1e-12;   // acceptance bound on refine_residual
  double bracket_delta = 1e-4;  // initial distance of d = 1 brackets from the integers
  bool bound_states = true;
  bool complex_pass = true;  // d >= 4 with a nonzero coupling polynomial
};

// Zeros of the full self-energy on the sphere of radius R. One shifted pole per
// l <= l_max (t in (l, l+1) for d = 1, nearest root to omega_l otherwise),
// exceptional half-integer poles when the coupling vanishes identically
// (even d >= 4, and odd d >= 5 with gamma = 0), bound states on the imaginary
// t axis, and off-axis complex roots found by Newton iteration.
std::vector<PoleRecord> sphere_poles(int d, double R, const PerturbationSpec& p, int l_max,
                                     const PoleOptions& opt = {});

// Normalized pole function f(t) = C R^{d-2} (coupling + Sigma_R)(t^2 / R^2).
cplx pole_function(int d, double R, const PerturbationSpec& p, cplx t);

// Leading-order shifted eigenvalue of level l.
double shifted_eig_asymptotic(int d, double R, const PerturbationSpec& p, int l);

struct ResidueAnalysis {
  std::vector<double> singular_values;
  double reference_scale = 0.0;  // top singular value of the unperturbed residue
  int rank = 0;
};

// Residue matrix of the perturbed Green's function at omega_l^2 / R^2 over n
// deterministic points on the sphere; rank at singular-value ratio 1e-6.
ResidueAnalysis residue_analysis(int d, double R, int l, const PerturbationSpec& p, int n,
                                 unsigned seed = 12345);
int residue_rank(int d, double R, int l, const PerturbationSpec& p, int n);

// Flat configuration: distances of x and x' from the point potential and
// from each other.
struct FlatConfig {
  double x = 1.0;
  double xp = 1.0;
  double sep = 1.0;
};

struct FlatLimitReport {
  std::vector<double> R_grid;
  std::vector<double> deviations;
  double fitted_order = 0.0;  // deviation ~ R^{-order}
};

// |G^p_{d,R} - G^p_d| on each R. Unperturbed specs compare the free kernels at sep.
FlatLimitReport flat_limit_report(GeometryKind kind, int d, const PerturbationSpec& p, cplx beta,
                                  const FlatConfig& cfg, const std::vector<double>& R_grid);

// Least-squares slope of log y against log x.
double fitted_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pgf
