// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pgf/sweep.hpp"

int main(int argc, char** argv) {
  pgf::SweepConfig cfg;
  CLI::App app{"Green's functions with point potentials: parameter sweeps to CSV/JSON"};
  pgf::add_options(app, cfg);
  bool check_only = false, dump = false;
  app.add_flag("--validate", check_only, "only validate the configuration");
  app.add_flag("--dump-config", dump, "print the effective configuration and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (dump) {
    std::cout << pgf::to_config_string(cfg);
    return 0;
  }
  if (check_only) {
    const auto diags = pgf::validate(cfg);
    for (const auto& d : diags) std::cout << d.field << ": " << d.message << "\n";
    return diags.empty() ? 0 : 2;
  }
  int threads = 0;
  if (const char* env = std::getenv("POINTGREEN_THREADS")) threads = std::atoi(env);
  if (cfg.out.empty()) return pgf::run(cfg, std::cout, std::cerr, threads);
  std::ofstream f(cfg.out);
  if (!f) {
    std::cerr << R"({"error":"ConfigError","field":"out","message":"cannot open output file"})" << "\n";
    return 2;
  }
  return pgf::run(cfg, f, std::cerr, threads);
}
