// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pgf {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr cplx I{0.0, 1.0};

enum class ErrorKind {
  PoleAtNonPositiveInteger,
  SeriesDivergence,
  DomainError,
  BranchCutError,
  NonIntegrableRemainder,
  TailDivergence,
  InsufficientJet,
  UnsupportedParameterRegion,
  OnSpectrum,
  DiagonalSingularity,
  AntipodalOverflow,
  RegimeMismatch,
  QuadratureFailure,
  UnsupportedFlavor,
  IncompatibleSpec,
  SelfEnergyZero,
  DivisionByZeroGamma,
  BracketingFailure,
  NoConvergence,
  FormulaOutOfRegime,
  SamplingDegenerate,
  ConfigError,
};

const char* to_string(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// True when x is exactly a non-positive integer on the real axis.
inline bool is_nonpositive_integer(cplx x) {
  return x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::round(x.real());
}

inline bool is_integer(cplx x) {
  return x.imag() == 0.0 && x.real() == std::round(x.real());
}

}  // namespace pgf
