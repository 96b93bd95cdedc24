// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgf/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

namespace pgf {

namespace {

using Cell = std::variant<std::monostate, double, long long, std::string>;
using Row = std::vector<Cell>;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return fmt17(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

nlohmann::json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (std::isfinite(v)) return v;
    return fmt17(v);
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + fmt17(v[k]);
  return s;
}

bool geometry_from(const std::string& s, GeometryKind& k) {
  if (s == "euclidean") k = GeometryKind::Euclidean;
  else if (s == "hyperbolic") k = GeometryKind::Hyperbolic;
  else if (s == "spherical") k = GeometryKind::Spherical;
  else return false;
  return true;
}

// Perturbation named by the config; "auto" picks the mode from the supplied fields.
PerturbationSpec perturbation_of(const SweepConfig& c) {
  using M = PerturbationSpec::Mode;
  std::string mode = c.perturbation;
  if (mode == "auto") {
    if (!c.gamma_coeffs.empty()) mode = (c.dim == 1 || c.dim == 3) ? "low_dim_gamma" : "odd_gamma";
    else if (!c.eta_coeffs.empty() || c.epsilon_set) mode = c.dim == 2 ? "low_dim_eps" : "even_eps_eta";
    else mode = "none";
  }
  PerturbationSpec p;
  if (mode == "none") p.mode = M::Unperturbed;
  else if (mode == "low_dim_gamma") p = PerturbationSpec::low_dim_gamma(c.gamma_coeffs.empty() ? 0.0 : c.gamma_coeffs[0]);
  else if (mode == "low_dim_eps") p = PerturbationSpec::low_dim_eps(c.epsilon);
  else if (mode == "odd_gamma") p = PerturbationSpec::odd_gamma({c.gamma_coeffs});
  else if (mode == "even_eps_eta") p = PerturbationSpec::even_eps_eta(c.epsilon, {c.eta_coeffs});
  else throw Error(ErrorKind::ConfigError, "unknown perturbation mode " + mode);
  return p;
}

Flavor flavor_of(const std::string& s) {
  if (s == "reference") return Flavor::Reference;
  if (s == "eps") return Flavor::ReferenceEps;
  if (s == "ms") return Flavor::MinimalSubtraction;
  throw Error(ErrorKind::ConfigError, "unknown flavor " + s);
}

struct SpectralAxis {
  bool by_beta = true;
  std::vector<double> values;
  SpectralPoint point(size_t k, double z_im) const {
    return by_beta ? SpectralPoint::from_beta(values[k]) : SpectralPoint::from_z(cplx(values[k], z_im));
  }
};

SpectralAxis spectral_axis(const SweepConfig& c) {
  SpectralAxis a;
  a.by_beta = !c.beta.empty();
  a.values = parse_grid(a.by_beta ? c.beta : c.z);
  return a;
}

// One unit of work: produces rows, or fails with an error tagged by its inputs.
struct Task {
  std::function<std::vector<Row>()> compute;
  Row inputs;  // echoed in the failure row
};

struct Table {
  std::vector<std::string> columns;
  size_t n_inputs = 0;  // leading input columns
  std::vector<Task> tasks;
};

void push_complex(Row& row, cplx v) {
  row.push_back(v.real());
  row.push_back(v.imag());
}

std::vector<std::string> spectral_columns(const SpectralAxis& a) {
  if (a.by_beta) return {"beta"};
  return {"z_re", "z_im"};
}

void push_spectral(Row& row, const SpectralAxis& a, size_t k, double z_im) {
  row.push_back(a.values[k]);
  if (!a.by_beta) row.push_back(z_im);
}

// |value - independent path| when a second path applies at this point
Cell green_error_estimate(const Geometry& g, int d, const SpectralPoint& s, const Separation& sep, cplx v) {
  if (d % 2 == 1) {
    try {
      const EvalPath other = EvalPath::Special;
      return std::abs(green_value(g, d, s, sep, other) - v);
    } catch (const Error&) {
    }
  }
  for (Regime reg : {Regime::NearDiagonal, Regime::FarField}) {
    try {
      return std::abs(green_series(g, d, s, sep, reg).value - v);
    } catch (const Error&) {
    }
  }
  return {};
}

Table build_green(const SweepConfig& c, GeometryKind kind) {
  Table t;
  const auto Rs = parse_grid(c.radius), rs = parse_grid(c.r);
  const SpectralAxis ax = spectral_axis(c);
  const PerturbationSpec p = perturbation_of(c);
  const bool pert = p.mode != PerturbationSpec::Mode::Unperturbed;
  t.columns = {"R"};
  for (auto& s : spectral_columns(ax)) t.columns.push_back(s);
  t.columns.push_back("r");
  t.n_inputs = t.columns.size();
  for (auto s : {"value_re", "value_im", "err_est"}) t.columns.push_back(s);
  for (double R : Rs)
    for (size_t k = 0; k < ax.values.size(); ++k)
      for (double r : rs) {
        Row in{R};
        push_spectral(in, ax, k, c.z_im);
        in.push_back(r);
        t.tasks.push_back({[=, &c] {
                             const Geometry g{kind, R};
                             const SpectralPoint s = ax.point(k, c.z_im);
                             const Separation sep = Separation::distance(r);
                             Row row = in;
                             if (pert) {
                               push_complex(row, perturbed_green(g, c.dim, p, s, Separation::distance(c.x_dist),
                                                                 Separation::distance(c.xp_dist), sep));
                               row.push_back(std::monostate{});
                             } else {
                               const cplx v = green_value(g, c.dim, s, sep);
                               push_complex(row, v);
                               row.push_back(green_error_estimate(g, c.dim, s, sep, v));
                             }
                             return std::vector<Row>{row};
                           },
                           in});
      }
  return t;
}

Table build_selfenergy(const SweepConfig& c, GeometryKind kind) {
  Table t;
  const auto Rs = parse_grid(c.radius);
  const SpectralAxis ax = spectral_axis(c);
  const PerturbationSpec p = perturbation_of(c);
  const bool pert = p.mode != PerturbationSpec::Mode::Unperturbed;
  const Flavor fl = flavor_of(c.flavor);
  t.columns = {"R"};
  for (auto& s : spectral_columns(ax)) t.columns.push_back(s);
  t.n_inputs = t.columns.size();
  for (auto s : {"sigma_re", "sigma_im", "density_re", "density_im", "err_est"}) t.columns.push_back(s);
  if (pert)
    for (auto s : {"full_re", "full_im"}) t.columns.push_back(s);
  for (double R : Rs)
    for (size_t k = 0; k < ax.values.size(); ++k) {
      Row in{R};
      push_spectral(in, ax, k, c.z_im);
      t.tasks.push_back({[=, &c] {
                           const Geometry g{kind, R};
                           const SpectralPoint s = ax.point(k, c.z_im);
                           const SelfEnergySpec spec{g, c.dim, fl, c.epsilon};
                           Row row = in;
                           const cplx S = reference_sigma(spec, s), sig = sigma_density(spec, s);
                           push_complex(row, S);
                           push_complex(row, sig);
                           // -dSigma/dz by central differences
                           const double h = 1e-5 * std::max(1.0, std::abs(s.z));
                           const cplx dS = (reference_sigma(spec, SpectralPoint::from_z(s.z + h)) -
                                            reference_sigma(spec, SpectralPoint::from_z(s.z - h))) / (2.0 * h);
                           row.push_back(std::abs(sig + dS));
                           if (pert) push_complex(row, full_self_energy(g, c.dim, p, s).value);
                           return std::vector<Row>{row};
                         },
                         in});
    }
  return t;
}

Table build_poles(const SweepConfig& c) {
  Table t;
  const auto Rs = parse_grid(c.radius);
  const PerturbationSpec p = perturbation_of(c);
  t.columns = {"R"};
  t.n_inputs = 1;
  for (auto s : {"source", "index", "t_re", "t_im", "z_re", "z_im", "asymptotic", "refine_residual"})
    t.columns.push_back(s);
  for (double R : Rs)
    t.tasks.push_back({[=, &c] {
                         PoleOptions opt;
                         opt.tolerance = c.tol;
                         std::vector<Row> rows;
                         for (const auto& pr : sphere_poles(c.dim, R, p, c.l_max, opt)) {
                           Row row{R, std::string(to_string(pr.source)), static_cast<long long>(pr.index)};
                           push_complex(row, pr.t);
                           push_complex(row, pr.z);
                           Cell asym;
                           if (pr.source == PoleRecord::Source::Shifted) try {
                               asym = shifted_eig_asymptotic(c.dim, R, p, pr.index);
                             } catch (const Error&) {
                             }
                           row.push_back(asym);
                           row.push_back(pr.refine_residual);
                           rows.push_back(row);
                         }
                         return rows;
                       },
                       Row{R}});
  return t;
}

Table build_flatlimit(const SweepConfig& c, GeometryKind kind) {
  Table t;
  const auto Rs = parse_grid(c.radius), rs = parse_grid(c.r);
  const auto betas = parse_grid(c.beta);
  const PerturbationSpec p = perturbation_of(c);
  t.columns = {"beta", "r", "R"};
  t.n_inputs = 3;
  for (auto s : {"deviation", "fitted_order"}) t.columns.push_back(s);
  for (double b : betas)
    for (double r : rs)
      t.tasks.push_back({[=, &c] {
                           const FlatLimitReport rep = flat_limit_report(kind, c.dim, p, b, {c.x_dist, c.xp_dist, r}, Rs);
                           std::vector<Row> rows;
                           for (size_t k = 0; k < Rs.size(); ++k)
                             rows.push_back({b, r, Rs[k], rep.deviations[k], rep.fitted_order});
                           return rows;
                         },
                         Row{b, r, std::monostate{}}});
  return t;
}

Table build_projections(const SweepConfig& c, GeometryKind kind) {
  Table t;
  const auto Rs = parse_grid(c.radius), rs = parse_grid(c.r);
  const bool by_level = !c.levels.empty();
  std::vector<double> levels;
  if (by_level) levels = parse_grid(c.levels);
  t.columns = {"R"};
  if (by_level) t.columns.push_back("l");
  else t.columns.insert(t.columns.end(), {"band_a", "band_b"});
  t.columns.push_back("r");
  t.n_inputs = t.columns.size();
  t.columns.push_back("value");
  auto add = [&](double R, Row in, Band band, double r) {
    in.push_back(r);
    t.tasks.push_back({[=, &c] {
                         Row row = in;
                         row.push_back(projection_kernel({kind, R}, c.dim, band, Separation::distance(r)));
                         return std::vector<Row>{row};
                       },
                       in});
  };
  for (double R : Rs) {
    if (by_level) {
      for (double l : levels)
        for (double r : rs) add(R, Row{R, static_cast<long long>(std::llround(l))}, SphereLevel{int(std::llround(l))}, r);
    } else {
      for (double r : rs) add(R, Row{R, c.band_a, c.band_b}, SpectralInterval{c.band_a, c.band_b}, r);
    }
  }
  return t;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  auto bad = [&](const std::string& why) { return Error(ErrorKind::ConfigError, "grid '" + spec + "': " + why); };
  auto num = [&](const std::string& s) {
    size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw bad("not a number: " + s);
    }
    if (pos != s.size()) throw bad("not a number: " + s);
    return v;
  };
  std::vector<std::string> parts;
  std::string cur;
  const char sepch = spec.find(':') != std::string::npos ? ':' : ',';
  for (char ch : spec) {
    if (ch == sepch) parts.push_back(cur), cur.clear();
    else if (ch != ' ') cur += ch;
  }
  parts.push_back(cur);
  std::vector<double> v;
  if (sepch == ':') {
    if (parts.size() != 4) throw bad("expected scale:start:stop:count");
    const double a = num(parts[1]), b = num(parts[2]), cnt = num(parts[3]);
    if (!(cnt >= 1) || cnt != std::floor(cnt)) throw bad("count must be an integer >= 1");
    const long n = static_cast<long>(cnt);
    if (parts[0] == "linear") {
      for (long k = 0; k < n; ++k) v.push_back(n == 1 ? a : a + (b - a) * double(k) / double(n - 1));
    } else if (parts[0] == "log") {
      if (!(a > 0 && b > 0)) throw bad("log grid needs positive ends");
      for (long k = 0; k < n; ++k) v.push_back(n == 1 ? a : a * std::pow(b / a, double(k) / double(n - 1)));
    } else {
      throw bad("scale must be linear or log");
    }
    return v;
  }
  for (const auto& s : parts) {
    if (s.empty()) continue;
    v.push_back(num(s));
  }
  if (v.empty()) throw bad("empty grid");
  return v;
}

std::vector<Diagnostic> validate(const SweepConfig& c) {
  std::vector<Diagnostic> out;
  auto diag = [&](const std::string& f, const std::string& m) { out.push_back({f, m}); };
  static const std::vector<std::string> commands{"green", "selfenergy", "poles", "flatlimit", "projections"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
    diag("command", "unknown command '" + c.command + "'");
  GeometryKind kind{};
  if (!geometry_from(c.geometry, kind)) diag("geometry", "unknown geometry '" + c.geometry + "'");
  if (c.dim < 1) diag("dim", "dimension must be >= 1");
  if (!(c.tol > 0.0)) diag("tol", "tolerance must be > 0");
  if (c.format != "csv" && c.format != "json") diag("format", "format must be csv or json");

  auto grid = [&](const std::string& field, const std::string& spec) -> std::vector<double> {
    try {
      return parse_grid(spec);
    } catch (const Error& e) {
      diag(field, e.what());
      return {};
    }
  };
  const auto Rs = grid("radius", c.radius);
  for (double R : Rs)
    if (!(R > 0.0)) diag("radius", "radius must be > 0");
  const bool spectral = c.command == "green" || c.command == "selfenergy" || c.command == "flatlimit";
  if (spectral) {
    if (!c.beta.empty() && !c.z.empty()) diag("beta", "give either beta or z, not both");
    if (c.beta.empty() && c.z.empty()) diag("beta", "a beta or z grid is required");
    if (!c.beta.empty())
      for (double b : grid("beta", c.beta))
        if (!(b > 0.0)) diag("beta", "beta must be > 0");
    if (!c.z.empty()) grid("z", c.z);
    if (c.command == "flatlimit" && c.beta.empty()) diag("beta", "flat limits take a beta grid");
  }
  if (c.command == "green" || c.command == "flatlimit" || c.command == "projections") {
    const auto rs = grid("r", c.r);
    for (double r : rs) {
      if (!(r >= 0.0)) diag("r", "separation must be >= 0");
      if (kind == GeometryKind::Spherical)
        for (double R : Rs)
          if (r > pi * R) diag("r", "spherical separation r > pi R");
    }
  }
  if (c.command == "poles" || (c.command == "projections" && !c.levels.empty()))
    if (kind != GeometryKind::Spherical) diag("geometry", c.command + " needs the spherical geometry");
  if (c.command == "flatlimit") {
    if (kind == GeometryKind::Euclidean) diag("geometry", "flat limits need a curved geometry");
    for (size_t k = 1; k < Rs.size(); ++k)
      if (!(Rs[k] > Rs[k - 1])) diag("radius", "R grid must be strictly increasing");
  }
  if (c.command == "poles" && c.l_max < 0) diag("l_max", "l_max must be >= 0");
  if (c.command == "projections") {
    if (!c.levels.empty()) {
      for (double l : grid("levels", c.levels))
        if (!(l >= 0.0) || l != std::floor(l)) diag("levels", "levels must be integers >= 0");
    } else if (!(c.band_a >= 0.0 && c.band_b > c.band_a)) {
      diag("band_a", "band needs 0 <= band_a < band_b");
    }
  }
  if (c.command == "selfenergy") {
    try {
      const Flavor f = flavor_of(c.flavor);
      if (c.dim >= 1) SelfEnergySpec{{kind, 1.0}, c.dim, f, c.epsilon}.validate();
    } catch (const Error& e) {
      diag("flavor", e.kind() == ErrorKind::UnsupportedFlavor ? "flavor incompatible with dimension" : e.what());
    }
  }
  if (c.dim >= 1) {
    try {
      const PerturbationSpec p = perturbation_of(c);
      try {
        p.validate(c.dim);
      } catch (const Error& e) {
        const std::string w = e.what();
        if (w.find("degree bound") != std::string::npos)
          diag(p.mode == PerturbationSpec::Mode::OddGamma ? "gamma_coeffs" : "eta_coeffs",
               p.mode == PerturbationSpec::Mode::OddGamma ? "degree bound (d-3)/2 exceeded" : "degree bound (d-4)/2 exceeded");
        else
          diag("perturbation", "perturbation mode incompatible with dimension");
      }
      if (c.command == "poles" && p.mode == PerturbationSpec::Mode::Unperturbed && c.perturbation == "auto")
        diag("perturbation", "poles need a perturbation (or perturbation = none)");
    } catch (const Error& e) {
      diag("perturbation", e.what());
    }
  }
  return out;
}

void add_options(CLI::App& app, SweepConfig& c) {
  app.set_config("--config", "", "key = value configuration file");
  app.add_option("--command", c.command, "green | selfenergy | poles | flatlimit | projections");
  app.add_option("--geometry", c.geometry, "euclidean | hyperbolic | spherical");
  app.add_option("--dim", c.dim, "dimension d");
  app.add_option("--radius", c.radius, "grid of curvature radii");
  app.add_option("--beta", c.beta, "grid of beta > 0 (z = -beta^2)");
  app.add_option("--z", c.z, "grid of Re z");
  app.add_option("--z-im", c.z_im, "Im z added to the z grid");
  app.add_option("--grid-r", c.r, "grid of separations");
  app.add_option("--perturbation", c.perturbation, "auto | none | low_dim_gamma | low_dim_eps | odd_gamma | even_eps_eta");
  app.add_option("--gamma-coeffs", c.gamma_coeffs, "gamma polynomial, ascending")->delimiter(',');
  app.add_option("--epsilon", c.epsilon, "eps for even d")->each([&c](const std::string&) { c.epsilon_set = true; });
  app.add_option("--eta-coeffs", c.eta_coeffs, "eta polynomial, ascending")->delimiter(',');
  app.add_option("--x-dist", c.x_dist, "|x - x0|");
  app.add_option("--xp-dist", c.xp_dist, "|x' - x0|");
  app.add_option("--flavor", c.flavor, "reference | eps | ms");
  app.add_option("--l-max", c.l_max, "highest sphere level for poles");
  app.add_option("--levels", c.levels, "sphere levels for projections");
  app.add_option("--band-a", c.band_a, "projection band start");
  app.add_option("--band-b", c.band_b, "projection band end");
  app.add_option("--format", c.format, "csv | json");
  app.add_option("--out", c.out, "output file (default: standard output)");
  app.add_option("--tol", c.tol, "pole refinement tolerance");
}

std::string to_config_string(const SweepConfig& c) {
  std::ostringstream s;
  auto q = [](const std::string& v) { return "\"" + v + "\""; };
  s << "command = " << q(c.command) << "\n"
    << "geometry = " << q(c.geometry) << "\n"
    << "dim = " << c.dim << "\n"
    << "radius = " << q(c.radius) << "\n";
  if (!c.beta.empty()) s << "beta = " << q(c.beta) << "\n";
  if (!c.z.empty()) s << "z = " << q(c.z) << "\n";
  s << "z-im = " << fmt17(c.z_im) << "\n"
    << "grid-r = " << q(c.r) << "\n"
    << "perturbation = " << q(c.perturbation) << "\n";
  if (!c.gamma_coeffs.empty()) s << "gamma-coeffs = " << q(join(c.gamma_coeffs)) << "\n";
  if (c.epsilon_set) s << "epsilon = " << fmt17(c.epsilon) << "\n";
  if (!c.eta_coeffs.empty()) s << "eta-coeffs = " << q(join(c.eta_coeffs)) << "\n";
  s << "x-dist = " << fmt17(c.x_dist) << "\n"
    << "xp-dist = " << fmt17(c.xp_dist) << "\n"
    << "flavor = " << q(c.flavor) << "\n"
    << "l-max = " << c.l_max << "\n";
  if (!c.levels.empty()) s << "levels = " << q(c.levels) << "\n";
  s << "band-a = " << fmt17(c.band_a) << "\n"
    << "band-b = " << fmt17(c.band_b) << "\n"
    << "format = " << q(c.format) << "\n"
    << "tol = " << fmt17(c.tol) << "\n";
  return s.str();
}

int run(const SweepConfig& c, std::ostream& sink, std::ostream& err, int threads) {
  const auto diags = validate(c);
  if (!diags.empty()) {
    for (const auto& d : diags)
      err << nlohmann::json{{"error", "ConfigError"}, {"field", d.field}, {"message", d.message}}.dump() << "\n";
    return 2;
  }
  GeometryKind kind{};
  geometry_from(c.geometry, kind);
  Table t;
  if (c.command == "green") t = build_green(c, kind);
  else if (c.command == "selfenergy") t = build_selfenergy(c, kind);
  else if (c.command == "poles") t = build_poles(c);
  else if (c.command == "flatlimit") t = build_flatlimit(c, kind);
  else t = build_projections(c, kind);
  t.columns.push_back("status");

  struct Outcome {
    std::vector<Row> rows;
    std::string kind, message;
  };
  std::vector<Outcome> results(t.tasks.size());
  auto work = [&](size_t i) {
    try {
      results[i].rows = t.tasks[i].compute();
    } catch (const Error& e) {
      results[i].kind = to_string(e.kind());
      results[i].message = e.what();
    } catch (const std::exception& e) {
      results[i].kind = "InternalError";
      results[i].message = e.what();
    }
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(std::max<size_t>(1, t.tasks.size())));
  if (threads == 1) {
    for (size_t i = 0; i < t.tasks.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < t.tasks.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }

  int status = 0;
  std::vector<Row> rows;
  for (size_t i = 0; i < results.size(); ++i) {
    if (results[i].kind.empty()) {
      for (auto& r : results[i].rows) {
        r.resize(t.columns.size() - 1);
        r.push_back(std::string("ok"));
        rows.push_back(std::move(r));
      }
      continue;
    }
    status = 1;
    Row r = t.tasks[i].inputs;
    r.resize(t.columns.size() - 1);
    r.push_back(results[i].kind);
    rows.push_back(std::move(r));
    nlohmann::json inputs;
    for (size_t k = 0; k < t.n_inputs && k < t.tasks[i].inputs.size(); ++k)
      inputs[t.columns[k]] = cell_json(t.tasks[i].inputs[k]);
    err << nlohmann::json{{"error", results[i].kind}, {"message", results[i].message}, {"point", i}, {"inputs", inputs}}.dump()
        << "\n";
  }

  if (c.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json o;
      for (size_t k = 0; k < t.columns.size(); ++k) o[t.columns[k]] = cell_json(r[k]);
      arr.push_back(o);
    }
    sink << arr.dump(1) << "\n";
  } else {
    for (size_t k = 0; k < t.columns.size(); ++k) sink << (k ? "," : "") << t.columns[k];
    sink << "\n";
    for (const auto& r : rows) {
      for (size_t k = 0; k < r.size(); ++k) sink << (k ? "," : "") << cell_text(r[k]);
      sink << "\n";
    }
  }
  return status;
}

}  // namespace pgf
