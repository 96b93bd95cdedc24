// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Green's functions perturbed by a point potential at x0:
// G^p(z; x, x') = G(z; x, x') + G(z; x, x0) G(z; x0, x') / (gamma(z) + Sigma(z)).

#pragma once

#include <utility>

#include "pgf/green.hpp"
#include "pgf/selfenergy.hpp"

namespace pgf {

struct PerturbationSpec {
  enum class Mode { Unperturbed, OddGamma, EvenEpsEta, LowDimGamma, LowDimEps };

  Mode mode = Mode::Unperturbed;
  Polynomial gamma;      // OddGamma
  double epsilon = 0.0;  // EvenEpsEta, LowDimEps
  Polynomial eta;        // EvenEpsEta
  double gamma0 = 0.0;   // LowDimGamma

  static PerturbationSpec unperturbed() { return {}; }
  static PerturbationSpec low_dim_gamma(double g0) { return {Mode::LowDimGamma, {}, 0.0, {}, g0}; }
  static PerturbationSpec low_dim_eps(double eps) { return {Mode::LowDimEps, {}, eps, {}, 0.0}; }
  static PerturbationSpec odd_gamma(Polynomial g) { return {Mode::OddGamma, std::move(g), 0.0, {}, 0.0}; }
  static PerturbationSpec even_eps_eta(double eps, Polynomial eta) { return {Mode::EvenEpsEta, {}, eps, std::move(eta), 0.0}; }

  // Throws IncompatibleSpec when the mode or polynomial degree does not fit d.
  void validate(int d) const;
  // Polynomial added to the reference self-energy (gamma, eta or the constant gamma0).
  Polynomial coupling() const;
};

const char* to_string(PerturbationSpec::Mode m) noexcept;

// Self-energy specification matching a perturbation (Reference or ReferenceEps).
SelfEnergySpec self_energy_spec(const Geometry& g, int d, const PerturbationSpec& p);

struct FullSelfEnergy {
  enum class State { Finite, Infinite };  // Infinite: unperturbed, correction term absent
  State state = State::Infinite;
  cplx value;
  cplx coupling;   // gamma(z) or eta(z)
  cplx reference;  // Sigma(z)
};

FullSelfEnergy full_self_energy(const Geometry& g, int d, const PerturbationSpec& p, const SpectralPoint& s);

cplx perturbed_green(const Geometry& g, int d, const PerturbationSpec& p, const SpectralPoint& s,
                     const Separation& x_to_x0, const Separation& xp_to_x0, const Separation& x_to_xp);

// a = -2 gamma0 (d = 1), e^{-eps} (d = 2), -1/(4 pi gamma0) (d = 3), and
// -Gamma(d/2 - 1) / (4 pi^{d/2} c(0)) with c = gamma or eta for d >= 4.
double scattering_length(int d, const PerturbationSpec& p);

// Inverse: the perturbation of scattering length a (constant gamma or eta, eps = 0 for even d >= 4).
PerturbationSpec from_scattering_length(int d, double a);

}  // namespace pgf
