// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgf/perturbed.hpp"

#include <algorithm>
#include <cmath>

namespace pgf {

const char* to_string(PerturbationSpec::Mode m) noexcept {
  switch (m) {
    case PerturbationSpec::Mode::Unperturbed: return "unperturbed";
    case PerturbationSpec::Mode::OddGamma: return "odd_gamma";
    case PerturbationSpec::Mode::EvenEpsEta: return "even_eps_eta";
    case PerturbationSpec::Mode::LowDimGamma: return "low_dim_gamma";
    case PerturbationSpec::Mode::LowDimEps: return "low_dim_eps";
  }
  return "?";
}

void PerturbationSpec::validate(int d) const {
  if (d < 1) throw Error(ErrorKind::DomainError, "dimension must be >= 1");
  switch (mode) {
    case Mode::Unperturbed:
      return;
    case Mode::LowDimGamma:
      if (d != 1 && d != 3) throw Error(ErrorKind::IncompatibleSpec, "a constant gamma is for d = 1 or 3");
      return;
    case Mode::LowDimEps:
      if (d != 2) throw Error(ErrorKind::IncompatibleSpec, "eps alone is for d = 2");
      return;
    case Mode::OddGamma:
      if (d % 2 == 0 || d < 5) throw Error(ErrorKind::IncompatibleSpec, "a gamma polynomial is for odd d >= 5");
      if (gamma.degree() > (d - 3) / 2) throw Error(ErrorKind::IncompatibleSpec, "degree bound (d-3)/2 exceeded");
      return;
    case Mode::EvenEpsEta:
      if (d % 2 == 1 || d < 4) throw Error(ErrorKind::IncompatibleSpec, "eps with eta is for even d >= 4");
      if (eta.degree() > (d - 4) / 2) throw Error(ErrorKind::IncompatibleSpec, "degree bound (d-4)/2 exceeded");
      return;
  }
}

Polynomial PerturbationSpec::coupling() const {
  switch (mode) {
    case Mode::OddGamma: return gamma;
    case Mode::EvenEpsEta: return eta;
    case Mode::LowDimGamma: return {{gamma0}};
    default: return {};
  }
}

SelfEnergySpec self_energy_spec(const Geometry& g, int d, const PerturbationSpec& p) {
  p.validate(d);
  if (d % 2 == 1) return {g, d, Flavor::Reference, 0.0};
  return {g, d, Flavor::ReferenceEps, p.epsilon};
}

FullSelfEnergy full_self_energy(const Geometry& g, int d, const PerturbationSpec& p, const SpectralPoint& s) {
  p.validate(d);
  if (p.mode == PerturbationSpec::Mode::Unperturbed) return {};
  FullSelfEnergy f;
  f.state = FullSelfEnergy::State::Finite;
  f.coupling = p.coupling()(s.z);
  f.reference = reference_sigma(self_energy_spec(g, d, p), s);
  f.value = f.coupling + f.reference;
  return f;
}

cplx perturbed_green(const Geometry& g, int d, const PerturbationSpec& p, const SpectralPoint& s,
                     const Separation& x_to_x0, const Separation& xp_to_x0, const Separation& x_to_xp) {
  const cplx free = green_value(g, d, s, x_to_xp);
  const FullSelfEnergy f = full_self_energy(g, d, p, s);
  if (f.state == FullSelfEnergy::State::Infinite) return free;
  const double scale = std::max({std::abs(f.coupling), std::abs(f.reference), 1e-30});
  if (std::abs(f.value) < 1e-12 * scale)
    throw Error(ErrorKind::SelfEnergyZero, "z is a pole of the perturbed Green's function");
  return free + green_value(g, d, s, x_to_x0) * green_value(g, d, s, xp_to_x0) / f.value;
}

double scattering_length(int d, const PerturbationSpec& p) {
  p.validate(d);
  if (d == 2) {
    if (p.mode != PerturbationSpec::Mode::LowDimEps) throw Error(ErrorKind::IncompatibleSpec, "d = 2 needs eps");
    return std::exp(-p.epsilon);
  }
  if (p.mode == PerturbationSpec::Mode::Unperturbed)
    throw Error(ErrorKind::IncompatibleSpec, "no scattering length without a perturbation");
  const double c0 = p.coupling()(0.0).real();
  if (c0 == 0.0) throw Error(ErrorKind::DivisionByZeroGamma, "the constant coupling term vanishes");
  if (d == 1) return -2.0 * c0;
  return -std::tgamma(0.5 * d - 1.0) / (4.0 * std::pow(pi, 0.5 * d) * c0);
}

PerturbationSpec from_scattering_length(int d, double a) {
  if (d == 2) {
    if (!(a > 0.0)) throw Error(ErrorKind::DomainError, "the d = 2 scattering length is positive");
    return PerturbationSpec::low_dim_eps(-std::log(a));
  }
  if (a == 0.0) throw Error(ErrorKind::DivisionByZeroGamma, "zero scattering length means infinite coupling");
  const double c0 = d == 1 ? -0.5 * a : -std::tgamma(0.5 * d - 1.0) / (4.0 * std::pow(pi, 0.5 * d) * a);
  if (d == 1 || d == 3) return PerturbationSpec::low_dim_gamma(c0);
  if (d % 2 == 1) return PerturbationSpec::odd_gamma({{c0}});
  return PerturbationSpec::even_eps_eta(0.0, {{c0}});
}

}  // namespace pgf
