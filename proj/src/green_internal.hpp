// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Unit-radius kernels shared by the green, selfenergy and spectral sources.

#pragma once

#include "pgf/green.hpp"

namespace pgf::detail {

void check_sphere_spectrum(int d, cplx z_unit);

cplx euclid_unit(int d, cplx beta, double r, EvalPath path);
cplx hyper_unit(int d, cplx beta, double r, EvalPath path);
cplx sphere_unit(int d, cplx beta, double r, EvalPath path);

cplx euclid_complex_d(cplx d, cplx beta, double r);
cplx hyper_complex_d(cplx d, cplx beta, double r);
cplx sphere_complex_d(cplx d, cplx beta, double r);

SeriesValue euclid_near(int d, cplx beta, double r);
SeriesValue euclid_far(int d, cplx beta, double r);
SeriesValue hyper_near(int d, cplx beta, double r);
SeriesValue hyper_far(int d, cplx beta, double r);
SeriesValue sphere_near(int d, cplx beta, double r);
SeriesValue sphere_antipodal(int d, cplx beta, double r);

}  // namespace pgf::detail
