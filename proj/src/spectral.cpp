// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "pgf/specfun.hpp"

namespace pgf {

namespace sf = specfun;

const char* to_string(PoleRecord::Source s) noexcept {
  switch (s) {
    case PoleRecord::Source::Shifted: return "shifted";
    case PoleRecord::Source::Exceptional: return "exceptional";
    case PoleRecord::Source::BoundState: return "boundstate";
    case PoleRecord::Source::OffAxis: return "offaxis";
  }
  return "?";
}

double sphere_omega(int d, int l) { return l + 0.5 * (d - 1); }

Level unperturbed_spectrum(int d, double R, int l) {
  if (d < 1) throw Error(ErrorKind::DomainError, "dimension must be >= 1");
  if (l < 0) throw Error(ErrorKind::DomainError, "harmonic degree must be >= 0");
  if (!(R > 0.0)) throw Error(ErrorKind::DomainError, "radius must be positive");
  const double w = sphere_omega(d, l);
  auto binom = [](int n, int k) -> long long {
    if (n < k || k < 0) return 0;
    return std::llround(boost::math::binomial_coefficient<double>(n, k));
  };
  return {w * w / (R * R), binom(d + l, d) - binom(d + l - 2, d)};
}

namespace {

// cot(w) without overflow off the real axis
cplx cot(cplx w) {
  if (w.imag() >= 0.0) {
    const cplx q = std::exp(2.0 * I * w);
    return I * (q + 1.0) / (q - 1.0);
  }
  const cplx q = std::exp(-2.0 * I * w);
  return -I * (q + 1.0) / (q - 1.0);
}

// The pole function split as coupling part + self-energy part, with the
// trigonometric/digamma factor evaluated in the local variable u = t - omega
// when the caller asks for it (real t near an unperturbed level).
class PoleFunction {
 public:
  PoleFunction(int d, double R, const PerturbationSpec& p) : d_(d), R_(R), p_(p) {
    p.validate(d);
    if (!(R > 0.0)) throw Error(ErrorKind::DomainError, "radius must be positive");
    coupling_ = p.coupling();
    cscale_ = self_energy_normalization(d) * std::pow(R, d - 2);
    if (d % 2 == 0) shift_ = 2.0 * p.epsilon + 2.0 * std::log(R);
  }

  bool coupling_zero() const { return coupling_.is_zero(); }

  // polynomial factor Q (odd) or P (even) at t
  cplx poly(cplx t) const {
    const cplx t2 = t * t;
    cplx q = 1.0;
    if (d_ % 2 == 1) {
      for (int k = 1; k <= (d_ - 3) / 2; ++k) q *= t2 - double(k * k);
    } else {
      for (int j = 0; j <= (d_ - 4) / 2; ++j) q *= t2 - (0.5 + j) * (0.5 + j);
    }
    return q;
  }

  cplx coupling_term(cplx t) const { return cscale_ * coupling_(t * t / (R_ * R_)); }

  cplx sigma_term(cplx t) const {
    if (d_ == 1) return pi * cot(pi * t) / t;
    if (d_ % 2 == 1) return pi * t * cot(pi * t) * poly(t);
    const double a = 0.5 * (d_ - 1);
    return (sf::digamma(a + t) + sf::digamma(a - t) - shift_) * poly(t);
  }

  cplx operator()(cplx t) const { return coupling_term(t) + sigma_term(t); }

  // real t = omega_l + u with the singular factor written in u
  double local(int l, double u) const {
    const double w = sphere_omega(d_, l);
    const double t = w + u;
    const double c = coupling_term(t).real();
    if (u == 0.0) return HUGE_VAL;
    const double ct = 1.0 / std::tan(pi * u);
    if (d_ == 1) return c + pi * ct / t;
    if (d_ % 2 == 1) return c + pi * t * ct * poly(t).real();
    const double s = boost::math::digamma(d_ - 1.0 + l + u) + boost::math::digamma(1.0 + l + u) + pi * ct - shift_;
    return c + s * poly(t).real();
  }

 private:
  int d_;
  double R_;
  const PerturbationSpec& p_;
  Polynomial coupling_;
  double cscale_ = 1.0;
  double shift_ = 0.0;
};

// Newton step relative to |t|: |f| / (|t| |f'|)
template <class F>
double relative_step(F&& f, double t, double h) {
  const double fp = (f(t + h) - f(t - h)) / (2.0 * h);
  const double ft = f(t);
  if (ft == 0.0) return 0.0;
  return std::abs(ft) / (std::max(std::abs(t), 1.0) * std::abs(fp));
}

// Root of g on [lo, hi] given a sign change.
template <class G>
double solve_bracket(G&& g, double lo, double hi, double glo, double ghi) {
  boost::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(52), iters);
  if (iters >= 200) throw Error(ErrorKind::NoConvergence, "bracketing solver did not converge");
  double u = 0.5 * (r.first + r.second);
  // secant polish
  double u0 = r.first, u1 = r.second, g0 = g(u0), g1 = g(u1);
  for (int k = 0; k < 3 && g1 != g0; ++k) {
    const double u2 = u1 - g1 * (u1 - u0) / (g1 - g0);
    if (!(u2 > std::min(lo, hi) && u2 < std::max(lo, hi))) break;
    u0 = u1, g0 = g1, u1 = u2, g1 = g(u2);
  }
  if (std::abs(g(u1)) <= std::abs(g(u))) u = u1;
  return u;
}

struct Bracket {
  double lo, hi, glo, ghi;
};

// Find a sign change of g inside the open interval between a and b (a, b
// same sign, |a| < |b|), trying the predicted bracket first.
template <class G>
bool find_bracket(G&& g, double pred_lo, double pred_hi, double a, double b, Bracket& out) {
  auto try_pair = [&](double x, double y) {
    const double gx = g(x), gy = g(y);
    if (std::isfinite(gx) && std::isfinite(gy) && (gx < 0.0) != (gy < 0.0)) {
      out = {std::min(x, y), std::max(x, y), x < y ? gx : gy, x < y ? gy : gx};
      return true;
    }
    return false;
  };
  if (pred_lo != pred_hi && try_pair(pred_lo, pred_hi)) return true;
  if (try_pair(a, b)) return true;
  constexpr int n = 400;
  double px = a, pg = g(a);
  for (int k = 1; k <= n; ++k) {
    const double x = a + (b - a) * k / n;
    const double gx = g(x);
    if (std::isfinite(pg) && std::isfinite(gx) && (pg < 0.0) != (gx < 0.0)) {
      out = {std::min(px, x), std::max(px, x), px < x ? pg : gx, px < x ? gx : pg};
      return true;
    }
    px = x, pg = gx;
  }
  return false;
}

PoleRecord make_record(double R, cplx t, PoleRecord::Source src, int index, double residual) {
  return {t * t / (R * R), t, src, index, residual};
}

void check_residual(const PoleRecord& r, double tol) {
  if (!(r.refine_residual <= tol))
    throw Error(ErrorKind::NoConvergence, "pole refinement residual " + std::to_string(r.refine_residual) +
                                              " above tolerance");
}

PoleRecord shifted_pole(const PoleFunction& f, int d, double R, int l, const PoleOptions& opt) {
  const double delta = opt.bracket_delta;
  if (d == 1) {
    // t in (l, l+1): local variable based at omega_l = l
    auto g = [&](double u) { return f.local(l, u); };
    Bracket b;
    double dl = delta;
    bool ok = false;
    for (int k = 0; k < 12 && !ok; ++k, dl *= 1e-2) ok = find_bracket(g, dl, 1.0 - dl, dl, 1.0 - dl, b);
    if (!ok) throw Error(ErrorKind::BracketingFailure, "no sign change in (l, l+1) for l = " + std::to_string(l));
    const double u = solve_bracket(g, b.lo, b.hi, b.glo, b.ghi);
    const double t = l + u;
    const double h = 1e-4 * std::min({u, 1.0 - u, 1.0});
    return make_record(R, t, PoleRecord::Source::Shifted, l,
                       relative_step([&](double tt) { return f.local(l, tt - l); }, t, h));
  }
  auto g = [&](double u) { return f.local(l, u); };
  // f ~ A/u + B near the pole at omega_l
  const double h = 1e-4;
  const double fp = g(h), fm = g(-h);
  const double A = 0.5 * (fp - fm) * h, B = 0.5 * (fp + fm);
  double side = B > 0.0 ? -1.0 : 1.0;
  double ustar = B != 0.0 ? -A / B : side * 0.5;
  if (!(std::abs(ustar) < 1.0)) ustar = side * 0.5;
  const double inner = std::min(delta, 0.25 * std::abs(ustar));
  const double outer = 1.0 - delta;
  Bracket b;
  auto attempt = [&](double s) {
    const double plo = s * std::min(0.25 * std::abs(ustar), outer), phi = s * std::min(4.0 * std::abs(ustar), outer);
    return find_bracket(g, plo, phi, s * inner, s * outer, b);
  };
  if (!attempt(side)) throw Error(ErrorKind::BracketingFailure, "no sign change next to level l = " + std::to_string(l));
  const double u = solve_bracket(g, b.lo, b.hi, b.glo, b.ghi);
  const double w = sphere_omega(d, l);
  const double hs = 1e-4 * std::min({std::abs(u), 1.0 - std::abs(u), 1.0});
  const double res = relative_step([&](double tt) { return f.local(l, tt - w); }, w + u, hs);
  // t = w + u with the sum formed last so tiny shifts survive in z
  PoleRecord r = make_record(R, w + u, PoleRecord::Source::Shifted, l, res);
  r.z = (w * w + u * (2.0 * w + u)) / (R * R);
  return r;
}

// Root near the real point t0 (zero of the polynomial factor or of cot).
PoleRecord exceptional_pole(const PoleFunction& f, double R, double t0, int j) {
  auto g = [&](double t) { return f(t).real(); };
  Bracket b;
  if (!find_bracket(g, t0 - 0.25, t0 + 0.25, t0 - 0.25, t0 + 0.25, b))
    throw Error(ErrorKind::BracketingFailure, "no sign change around an exceptional point");
  const double t = solve_bracket(g, b.lo, b.hi, b.glo, b.ghi);
  return make_record(R, t, PoleRecord::Source::Exceptional, j, relative_step(g, t, 1e-6));
}

void bound_states(const PoleFunction& f, double R, double tol, std::vector<PoleRecord>& out) {
  auto g = [&](double tau) { return f(cplx(0.0, tau)).real(); };
  const double lo = 1e-3, hi = 1e3 * std::max(1.0, R);
  constexpr int n = 600;
  double px = lo, pg = g(lo);
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    const double x = lo * std::pow(hi / lo, double(k) / n);
    const double gx = g(x);
    if (std::isfinite(pg) && std::isfinite(gx) && (pg < 0.0) != (gx < 0.0)) {
      const double tau = solve_bracket(g, px, x, pg, gx);
      PoleRecord r = make_record(R, cplx(0.0, tau), PoleRecord::Source::BoundState, count++,
                                 relative_step(g, tau, 1e-6 * tau));
      check_residual(r, tol);
      out.push_back(r);
    }
    px = x, pg = gx;
  }
}

void off_axis(const PoleFunction& f, int d, double R, int l_max, double tol, std::vector<PoleRecord>& out) {
  std::vector<cplx> seeds;
  const double tmax = sphere_omega(d, l_max) + 1.0;
  for (int j = 0; j + 0.5 < tmax; ++j)
    for (double im : {0.5, 1.0, 1.5}) seeds.push_back({j + 0.5, im}), seeds.push_back({j + 0.5, -im});
  for (const auto& r : out)
    if (r.t.imag() == 0.0) seeds.push_back(r.t + cplx(0.0, 0.5)), seeds.push_back(r.t - cplx(0.0, 0.5));
  std::vector<PoleRecord> found;
  for (cplx t : seeds) {
    bool ok = false;
    for (int it = 0; it < 80; ++it) {
      const double h = 1e-6 * std::max(1.0, std::abs(t));
      const cplx ft = f(t);
      const cplx fp = (f(t + h) - f(t - h)) / (2.0 * h);
      cplx step = ft / fp;
      if (!std::isfinite(std::abs(step))) break;
      if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
      t -= step;
      if (std::abs(t.imag()) > 2.0 || t.real() <= 0.0 || t.real() > tmax) break;
      if (std::abs(step) <= 1e-15 * std::abs(t)) {
        ok = true;
        break;
      }
    }
    if (!ok || std::abs(t.imag()) < 1e-6 || t.real() < 1e-6) continue;
    const double h = 1e-6 * std::abs(t);
    const double res = std::abs(f(t)) / (std::abs(t) * std::abs((f(t + h) - f(t - h)) / (2.0 * h)));
    if (!(res <= tol)) continue;
    bool dup = false;
    for (const auto& r : found) dup |= std::abs(r.t - t) < 1e-8 * std::abs(t);
    if (!dup) found.push_back(make_record(R, t, PoleRecord::Source::OffAxis, int(found.size()), res));
  }
  std::sort(found.begin(), found.end(), [](const PoleRecord& a, const PoleRecord& b) {
    return a.t.real() != b.t.real() ? a.t.real() < b.t.real() : a.t.imag() < b.t.imag();
  });
  for (size_t k = 0; k < found.size(); ++k) found[k].index = int(k);
  out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

cplx pole_function(int d, double R, const PerturbationSpec& p, cplx t) {
  if (p.mode == PerturbationSpec::Mode::Unperturbed)
    throw Error(ErrorKind::IncompatibleSpec, "the unperturbed self-energy is infinite");
  return PoleFunction(d, R, p)(t);
}

std::vector<PoleRecord> sphere_poles(int d, double R, const PerturbationSpec& p, int l_max, const PoleOptions& opt) {
  if (l_max < 0) throw Error(ErrorKind::DomainError, "l_max must be >= 0");
  std::vector<PoleRecord> out;
  if (p.mode == PerturbationSpec::Mode::Unperturbed) {
    p.validate(d);
    for (int l = 0; l <= l_max; ++l)
      out.push_back(make_record(R, sphere_omega(d, l), PoleRecord::Source::Shifted, l, 0.0));
    return out;
  }
  const PoleFunction f(d, R, p);
  if (f.coupling_zero() && d >= 4) {
    // zeros of the polynomial factor below the first level
    const int jmax = d % 2 == 0 ? (d - 4) / 2 : (d - 5) / 2;
    for (int j = 0; j <= jmax; ++j) {
      PoleRecord r = exceptional_pole(f, R, j + 0.5, j);
      check_residual(r, opt.tolerance);
      out.push_back(r);
    }
  }
  for (int l = 0; l <= l_max; ++l) {
    PoleRecord r = shifted_pole(f, d, R, l, opt);
    check_residual(r, opt.tolerance);
    for (const auto& q : out)
      if (q.source == PoleRecord::Source::Shifted && std::abs(q.t - r.t) < 1e-9 * std::abs(r.t))
        throw Error(ErrorKind::BracketingFailure, "two levels claim the same root; R too small to separate brackets");
    out.push_back(r);
  }
  if (opt.bound_states) bound_states(f, R, opt.tolerance, out);
  if (opt.complex_pass && d >= 4 && !f.coupling_zero()) off_axis(f, d, R, l_max, opt.tolerance, out);
  return out;
}

double shifted_eig_asymptotic(int d, double R, const PerturbationSpec& p, int l) {
  p.validate(d);
  if (l < 0) throw Error(ErrorKind::DomainError, "harmonic degree must be >= 0");
  using M = PerturbationSpec::Mode;
  if (p.mode == M::Unperturbed) throw Error(ErrorKind::FormulaOutOfRegime, "no shift without a perturbation");
  const double R2 = R * R;
  if (d == 1) {
    const double h = l + 0.5;
    return h * h / R2 * (1.0 + 4.0 * p.gamma0 / (pi * R));
  }
  const double w = sphere_omega(d, l);
  const double C = self_energy_normalization(d);
  const cplx c = p.coupling()(w * w / R2);
  if (d % 2 == 1) {
    if (c == 0.0) throw Error(ErrorKind::FormulaOutOfRegime, "gamma vanishes at the level");
    double q = 1.0;
    for (int k = 1; k <= (d - 3) / 2; ++k) q *= w * w - double(k * k);
    return w * w / R2 * (1.0 - 2.0 * q / (C * std::pow(R, d - 2) * c.real()));
  }
  if (p.coupling().is_zero()) {
    const double lr = std::log(R) + p.epsilon;
    if (lr == 0.0) throw Error(ErrorKind::FormulaOutOfRegime, "ln(R e^eps) = 0");
    return (w * w + w / lr) / R2;
  }
  if (c == 0.0) throw Error(ErrorKind::FormulaOutOfRegime, "eta vanishes at the level");
  double q = 1.0;
  for (int j = 0; j <= (d - 4) / 2; ++j) q *= w * w - (0.5 + j) * (0.5 + j);
  return (w * w - 2.0 * w * q / (C * std::pow(R, d - 2) * c.real())) / R2;
}

namespace {

using Point = std::vector<double>;

double geodesic(const Point& a, const Point& b, double R) {
  double dot = 0.0;
  for (size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
  return R * std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace

ResidueAnalysis residue_analysis(int d, double R, int l, const PerturbationSpec& p, int n, unsigned seed) {
  const Level lev = unperturbed_spectrum(d, R, l);
  if (n < lev.multiplicity + 2)
    throw Error(ErrorKind::SamplingDegenerate, "need at least m_{d,l} + 2 sample points");
  p.validate(d);
  // deterministic points, kept away from each other, the potential and its antipode
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Point x0(d + 1, 0.0);
  x0[0] = 1.0;
  std::vector<Point> pts;
  for (int tries = 0; int(pts.size()) < n; ++tries) {
    if (tries > 100 * n) throw Error(ErrorKind::SamplingDegenerate, "could not place generic sample points");
    Point x(d + 1);
    double nn = 0.0;
    for (double& c : x) c = normal(rng), nn += c * c;
    for (double& c : x) c /= std::sqrt(nn);
    bool ok = std::abs(std::abs(x[0]) - 1.0) > 1e-2;
    for (const auto& q : pts) ok &= geodesic(x, q, 1.0) > 0.05;
    if (ok) pts.push_back(x);
  }
  Eigen::MatrixXd free(n, n), total(n, n);
  const double z0 = lev.eigenvalue;
  const double spacing = (std::pow(sphere_omega(d, l) + 1.0, 2) - std::pow(sphere_omega(d, l), 2)) / (R * R);
  const Geometry g = Geometry::spherical(R);
  const bool perturbed = p.mode != PerturbationSpec::Mode::Unperturbed;
  // the approach radius must stay well inside the distance to the shifted
  // pole, estimated from F ~ -a/(z - z0) + b
  double h = 1e-3 * spacing;
  if (perturbed) {
    const double e = 1e-3 * spacing;
    const cplx fp = full_self_energy(g, d, p, SpectralPoint::from_z(z0 + I * e)).value;
    const cplx fm = full_self_energy(g, d, p, SpectralPoint::from_z(z0 - I * e)).value;
    const cplx a = -(fp - fm) * I * e / 2.0, b = 0.5 * (fp + fm);
    if (std::abs(b) > 0.0) h = std::min(h, 1e-3 * std::abs(a / b));
  }
  // residue of G(x, x0) G(x0, x') / F at z0 from four symmetric approaches
  std::vector<cplx> gx0(4 * n);
  std::array<cplx, 4> invF{};
  if (perturbed) {
    for (int k = 0; k < 4; ++k) {
      const cplx dz = h * std::polar(1.0, 0.5 * pi * k);
      const SpectralPoint s = SpectralPoint::from_z(z0 + dz);
      invF[k] = dz / full_self_energy(g, d, p, s).value;
      for (int i = 0; i < n; ++i) gx0[4 * i + k] = green_value(g, d, s, Separation::distance(geodesic(pts[i], x0, R)));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double pij = projection_kernel(g, d, SphereLevel{l}, Separation::distance(geodesic(pts[i], pts[j], R)));
      free(i, j) = -pij;
      cplx corr = 0.0;
      if (perturbed)
        for (int k = 0; k < 4; ++k) corr += gx0[4 * i + k] * gx0[4 * j + k] * invF[k];
      total(i, j) = -pij + 0.25 * corr.real();
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd_free(free), svd(total);
  ResidueAnalysis a;
  a.reference_scale = svd_free.singularValues()(0);
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    a.singular_values.push_back(svd.singularValues()(k));
    if (svd.singularValues()(k) > 1e-6 * a.reference_scale) ++a.rank;
  }
  return a;
}

int residue_rank(int d, double R, int l, const PerturbationSpec& p, int n) {
  return residue_analysis(d, R, l, p, n).rank;
}

double fitted_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (!(x[k] > 0.0 && y[k] > 0.0)) continue;
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, ++n;
  }
  if (n < 2) return std::nan("");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

FlatLimitReport flat_limit_report(GeometryKind kind, int d, const PerturbationSpec& p, cplx beta,
                                  const FlatConfig& cfg, const std::vector<double>& R_grid) {
  if (kind == GeometryKind::Euclidean) throw Error(ErrorKind::DomainError, "flat limit needs a curved geometry");
  if (!(beta.real() > 0.0)) throw Error(ErrorKind::DomainError, "flat limit needs Re beta > 0");
  for (size_t k = 0; k < R_grid.size(); ++k)
    if (!(R_grid[k] > 0.0) || (k > 0 && !(R_grid[k] > R_grid[k - 1])))
      throw Error(ErrorKind::DomainError, "R grid must be positive and strictly increasing");
  const SpectralPoint s = SpectralPoint::from_beta(beta);
  const auto sx = Separation::distance(cfg.x), sxp = Separation::distance(cfg.xp), sep = Separation::distance(cfg.sep);
  const cplx flat = perturbed_green(Geometry::euclidean(), d, p, s, sx, sxp, sep);
  FlatLimitReport rep;
  rep.R_grid = R_grid;
  for (double R : R_grid) {
    const Geometry g{kind, R};
    rep.deviations.push_back(std::abs(perturbed_green(g, d, p, s, sx, sxp, sep) - flat));
  }
  rep.fitted_order = -fitted_log_slope(rep.R_grid, rep.deviations);
  return rep;
}

}  // namespace pgf
