// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Generalized (finite-part) integrals of functions with known power
// singularities at one endpoint.

#pragma once

#include <functional>
#include <vector>

#include "pgf/core.hpp"

namespace pgf::genint {

using Integrand = std::function<cplx(double)>;

struct ExpansionTerm {
  cplx k;      // exponent
  cplx coeff;  // f_k
};

// Which end of the interval carries the singularity.
enum class Side { Left, Right };

// f(r) ~ sum f_k |r - endpoint|^k near the endpoint. Every exponent with
// Re k <= -1 must be listed; extra terms with Re k > -1 are allowed.
struct SingularExpansion {
  double endpoint = 0.0;
  std::vector<ExpansionTerm> terms;
  Side side = Side::Left;

  cplx anomaly() const;  // f_{-1}
};

struct GenIntegralResult {
  cplx value;
  cplx anomaly_coefficient;
  double error_estimate = 0.0;
};

// Behaviour away from the singular endpoint. For Finite, other_end is the
// far end of the interval; otherwise the integral runs to +infinity (or
// -infinity for Side::Right) and length_scale seeds the panel width.
struct TailHint {
  enum class Kind { Exponential, Power, Finite };
  Kind kind = Kind::Exponential;
  double other_end = 0.0;
  double length_scale = 1.0;
};

struct Tolerance {
  double rel = 1e-13;
  int max_panels = 400;
};

// Def.: sum_{k != -1} f_k s^{k+1}/(k+1) + f_{-1} ln s + int_0^s (f - sum f_k t^k) dt + rest,
// with s = 1, or s = interval length if that is shorter.
GenIntegralResult gen_integral(const Integrand& f, const SingularExpansion& exp, const TailHint& tail = {},
                               const Tolerance& tol = {});

// Expansion of u -> c f(c u) (endpoint at 0).
SingularExpansion rescaled(const SingularExpansion& exp, double c);
// Expansion of u -> p u^{p-1} f(u^p) (endpoint at 0).
SingularExpansion power_substituted(const SingularExpansion& exp, double p);

// Taylor data of a coordinate map g with g(0) = 0: taylor[j] = g^{(j+1)}(0)/(j+1)!.
struct CoordinateJet {
  std::vector<cplx> taylor;
};

// gen_g int - gen int for the coordinate change r = g(u). Only the integer
// exponents -1, -2, ... contribute; the jet must reach order l for f_{-l}.
cplx change_of_variable_shift(const SingularExpansion& exp, const CoordinateJet& g);

// Bilinear generalized integrals with closed forms:
//   KK: gen int_0^inf K_a(b r)^2 2r dr                        (aux = b, Re b > 0)
//   SS: gen int_{-2}^{2} S_{a,i beta}(u/2)^2 (1 - u^2/4)^a du  (aux = beta, Re a > -1)
//   ZZ: gen int_2^inf Z_{a,lambda}(u/2)^2 (u^2/4 - 1)^a du     (aux = lambda, Re lambda > 0)
enum class Family { KK, SS, ZZ };

cplx bilinear_catalog(Family family, cplx alpha, cplx aux);

// The same integrals evaluated literally by gen_integral; for testing the
// closed forms and the quadrature against each other.
SingularExpansion bilinear_expansion(Family family, cplx alpha, cplx aux);
GenIntegralResult bilinear_literal(Family family, cplx alpha, cplx aux);

}  // namespace pgf::genint
