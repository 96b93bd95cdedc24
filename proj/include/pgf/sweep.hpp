// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// Batch sweeps over grids of (R, spectral parameter, separation, ...) for the
// command-line front end. Rows come out in lexicographic grid order.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pgf/spectral.hpp"

namespace CLI {
class App;
}

namespace pgf {

struct SweepConfig {
  std::string command = "green";  // green | selfenergy | poles | flatlimit | projections
  std::string geometry = "euclidean";
  int dim = 3;

  // grids: "a,b,c" or "linear:start:stop:count" or "log:start:stop:count"
  std::string radius = "1";
  std::string beta;  // real beta > 0; exclusive with z
  std::string z;
  double z_im = 0.0;  // added to every z grid point
  std::string r = "1";

  // perturbation: auto | none | low_dim_gamma | low_dim_eps | odd_gamma | even_eps_eta
  std::string perturbation = "auto";
  std::vector<double> gamma_coeffs;
  double epsilon = 0.0;
  bool epsilon_set = false;
  std::vector<double> eta_coeffs;
  double x_dist = 1.0;   // |x - x0| for perturbed kernels and flat limits
  double xp_dist = 1.0;  // |x' - x0|

  std::string flavor = "reference";  // selfenergy: reference | eps | ms
  int l_max = 3;                     // poles
  std::string levels;                // projections on the sphere, e.g. "0,1,2"
  double band_a = 0.0, band_b = 1.0;  // projections over an interval when levels is empty

  std::string format = "csv";
  std::string out;  // empty: standard output
  double tol = 1e-12;
};

struct Diagnostic {
  std::string field;
  std::string message;
};

// Empty iff run() would not raise a configuration error.
std::vector<Diagnostic> validate(const SweepConfig& cfg);

std::vector<double> parse_grid(const std::string& spec);  // throws ConfigError

// Registers the flags (and the --config file option) on app, bound to cfg.
void add_options(CLI::App& app, SweepConfig& cfg);

// key = value serialization of cfg, readable through --config.
std::string to_config_string(const SweepConfig& cfg);

// Writes the table to sink. Returns 0 on success, 1 if any grid point failed
// (failed rows carry their error kind; one JSON error record per failure goes
// to err), 2 on configuration errors. threads <= 0 picks the hardware count.
int run(const SweepConfig& cfg, std::ostream& sink, std::ostream& err, int threads = 1);

}  // namespace pgf
