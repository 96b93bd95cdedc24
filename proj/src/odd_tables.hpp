// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Closed forms of the iterated radial derivatives that give the odd-d
// kernels. Expanded once into integer coefficient tables.

#pragma once

#include <vector>

#include "pgf/core.hpp"

namespace pgf::detail {

inline constexpr int kMaxOddDim = 13;

// e^{-b r} sum_k c_k (b r)^k / r^{2n+1}
struct EuclidTerm {
  int k;
  double c;
};
// e^{-b r} c b^a cosh^p r / sinh^q r
struct HyperTerm {
  int a, p, q;
  double c;
};
// c b^a cos^p r / sin^q r times sinh(b(pi - r)) (cosh_type = false) or cosh(b(pi - r))
struct SphereTerm {
  bool cosh_type;
  int a, p, q;
  double c;
};

// n = (d-3)/2 applications of -(1/f) d/dr.
const std::vector<EuclidTerm>& euclid_odd_terms(int n);
const std::vector<HyperTerm>& hyper_odd_terms(int n);
const std::vector<SphereTerm>& sphere_odd_terms(int n);

}  // namespace pgf::detail
