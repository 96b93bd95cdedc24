// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgf/core.hpp"

namespace pgf {

const char* to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BranchCutError: return "BranchCutError";
    case ErrorKind::NonIntegrableRemainder: return "NonIntegrableRemainder";
    case ErrorKind::TailDivergence: return "TailDivergence";
    case ErrorKind::InsufficientJet: return "InsufficientJet";
    case ErrorKind::UnsupportedParameterRegion: return "UnsupportedParameterRegion";
    case ErrorKind::OnSpectrum: return "OnSpectrum";
    case ErrorKind::DiagonalSingularity: return "DiagonalSingularity";
    case ErrorKind::AntipodalOverflow: return "AntipodalOverflow";
    case ErrorKind::RegimeMismatch: return "RegimeMismatch";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::UnsupportedFlavor: return "UnsupportedFlavor";
    case ErrorKind::IncompatibleSpec: return "IncompatibleSpec";
    case ErrorKind::SelfEnergyZero: return "SelfEnergyZero";
    case ErrorKind::DivisionByZeroGamma: return "DivisionByZeroGamma";
    case ErrorKind::BracketingFailure: return "BracketingFailure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::FormulaOutOfRegime: return "FormulaOutOfRegime";
    case ErrorKind::SamplingDegenerate: return "SamplingDegenerate";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace pgf
