// Copyright 2026 The pointgreen Authors
// SPDX-License-Identifier: Apache-2.0

// The subtracted part int_0^s (f - sum f_k t^k) is summed over dyadic panels
// [s/2^{j+1}, s/2^j]. Near the endpoint the subtraction cancels many digits,
// so panels are only trusted while they stay above the rounding level of the
// unsubtracted integrand; the rest is extrapolated geometrically, which is
// what a remainder ~ t^k with Re k > -1 produces.

#include "pgf/genint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace pgf::genint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_minus_one(cplx k) { return std::abs(k + 1.0) < 1e-12; }

struct Panel {
  cplx value;
  double err = 0.0;
  double noise = 0.0;
};

// Dyadic panels keep the nearest singularity one panel width away, where a
// single Kronrod rule is already far below rounding; deep refinement would only
// chase cancellation noise. g(t, &mag) returns the integrand and the magnitude of the largest quantity
// that went into it, for the rounding estimate.
template <class G>
Panel integrate_panel(G&& g, double lo, double hi, double rel, unsigned depth) {
  double peak = 0.0;
  auto h = [&](double t) {
    double m = 0.0;
    const cplx v = g(t, m);
    peak = std::max(peak, m);
    return v;
  };
  double err = 0.0, l1 = 0.0;
  const cplx v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(h, lo, hi, depth, rel, &err, &l1);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::QuadratureFailure, "non-finite integrand value");
  return {v, err, 16.0 * kEps * peak * (hi - lo)};
}

struct Sum {
  cplx value;
  double err = 0.0;
};

// Wynn's epsilon algorithm on partial sums; returns the highest even-column
// entry. Sums of several geometric sequences, which is what a remainder with a
// few power terms produces on dyadic panels, are extrapolated exactly.
cplx wynn(const std::vector<cplx>& s) {
  const std::size_t n = s.size();
  std::vector<cplx> prev(n + 1, 0.0), cur(s.begin(), s.end());
  cplx best = s.back();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<cplx> next(n - k);
    for (std::size_t i = 0; i + k < n; ++i) {
      const cplx d = cur[i + 1] - cur[i];
      if (d == cplx(0.0)) return k % 2 == 1 ? cur[i + 1] : best;
      next[i] = prev[i + 1] + 1.0 / d;
    }
    prev = cur;
    cur = next;
    if (k % 2 == 0) best = cur.back();
  }
  return best;
}

// Sums panels whose contributions shrink geometrically, accelerating the
// partial sums. Panels that sink below their own rounding level end the loop.
template <class NextPanel>
Sum geometric_panels(NextPanel&& next, const Tolerance& tol, ErrorKind on_failure, const char* what) {
  std::vector<cplx> sums;
  cplx acc = 0.0, prev_value = 0.0, last_est = 0.0;
  double err = 0.0, noise = 0.0, total = 0.0, last_change = std::numeric_limits<double>::infinity();
  int rising = 0, settled = 0, quiet = 0;
  for (int j = 0; j < tol.max_panels; ++j) {
    const Panel p = next(j);
    const double mag = std::abs(p.value);
    if (mag <= 4.0 * (p.noise + p.err)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    noise += p.noise;
    err += p.err;
    total += mag;
    acc += p.value;
    if (j > 0 && mag >= 0.98 * std::abs(prev_value) && mag > 4.0 * (p.noise + p.err)) {
      if (++rising >= 8) throw Error(on_failure, what);
    } else {
      rising = 0;
    }
    prev_value = p.value;
    sums.push_back(acc);
    // the table only needs the recent partial sums
    const std::size_t window = std::min<std::size_t>(sums.size(), 12);
    const cplx est = wynn(std::vector<cplx>(sums.end() - window, sums.end()));
    const double scale = std::max(std::abs(est), 1e-3 * total);
    last_change = std::abs(est - last_est);
    last_est = est;
    if (j >= 3 && last_change <= tol.rel * scale) {
      if (++settled >= 2) return {est, err + noise + last_change};
    } else {
      settled = 0;
    }
    // deeper panels would only add rounding noise
    if (j >= 4 && noise > 4.0 * last_change) break;
  }
  if (rising >= 4 && sums.size() >= static_cast<std::size_t>(tol.max_panels)) throw Error(on_failure, what);
  if (sums.empty()) return {0.0, 0.0};
  return {last_est, err + noise + (std::isfinite(last_change) ? last_change : std::abs(acc))};
}

}  // namespace

cplx SingularExpansion::anomaly() const {
  cplx f = 0.0;
  for (const auto& t : terms)
    if (is_minus_one(t.k)) f += t.coeff;
  return f;
}

GenIntegralResult gen_integral(const Integrand& f, const SingularExpansion& exp, const TailHint& tail,
                               const Tolerance& tol) {
  const double a = exp.endpoint;
  const double dir = exp.side == Side::Left ? 1.0 : -1.0;
  const bool finite = tail.kind == TailHint::Kind::Finite;
  const double length = finite ? std::abs(tail.other_end - a) : std::numeric_limits<double>::infinity();
  if (finite && ((tail.other_end - a) * dir <= 0.0))
    throw Error(ErrorKind::DomainError, "gen_integral: other_end on the wrong side of the singular endpoint");
  const double s = std::min(1.0, length);

  auto local = [&](double t) { return f(a + dir * t); };

  // Closed-form part of the subtracted terms.
  cplx value = 0.0;
  for (const auto& term : exp.terms) {
    if (is_minus_one(term.k))
      value += term.coeff * std::log(s);
    else
      value += term.coeff * std::pow(s, term.k + 1.0) / (term.k + 1.0);
  }

  auto remainder = [&](double t, double& mag) {
    const cplx fv = local(t);
    cplx sub = 0.0;
    double m = std::abs(fv);
    for (const auto& term : exp.terms) {
      const cplx v = term.coeff * std::pow(t, term.k);
      sub += v;
      m = std::max(m, std::abs(v));
    }
    mag = m;
    return fv - sub;
  };
  const Sum core = geometric_panels(
      [&](int j) {
        const double hi = std::ldexp(s, -j);
        return integrate_panel(remainder, 0.5 * hi, hi, tol.rel, 2);
      },
      tol, ErrorKind::NonIntegrableRemainder, "subtracted integrand is not integrable at the endpoint");
  value += core.value;
  double err = core.err;

  if (finite) {
    if (length > s) {
      boost::math::quadrature::tanh_sinh<double> q;
      double e = 0.0;
      const cplx outer = q.integrate(local, s, length, tol.rel, &e);
      if (!std::isfinite(outer.real()) || !std::isfinite(outer.imag()))
        throw Error(ErrorKind::QuadratureFailure, "non-finite integral away from the endpoint");
      value += outer;
      err += e;
    }
  } else {
    auto plain = [&](double t, double& mag) {
      const cplx v = local(t);
      mag = std::abs(v);
      return v;
    };
    const double w0 = tail.length_scale > 0.0 ? tail.length_scale : 1.0;
    const Sum outer = geometric_panels(
        [&](int j) {
          // panels [s + w0 (2^j - 1), s + w0 (2^{j+1} - 1)]
          const double lo = s + w0 * (std::ldexp(1.0, j) - 1.0);
          const double hi = s + w0 * (std::ldexp(1.0, j + 1) - 1.0);
          return integrate_panel(plain, lo, hi, tol.rel, 15);
        },
        tol, ErrorKind::TailDivergence, "integrand does not decay at infinity");
    value += outer.value;
    err += outer.err;
  }
  return {value, exp.anomaly(), err};
}

SingularExpansion rescaled(const SingularExpansion& exp, double c) {
  if (!(c > 0.0)) throw Error(ErrorKind::DomainError, "rescaled: factor must be positive");
  SingularExpansion out{exp.endpoint / c, {}, exp.side};
  for (const auto& t : exp.terms) out.terms.push_back({t.k, t.coeff * std::pow(c, t.k + 1.0)});
  return out;
}

SingularExpansion power_substituted(const SingularExpansion& exp, double p) {
  if (!(p > 0.0)) throw Error(ErrorKind::DomainError, "power_substituted: power must be positive");
  if (exp.endpoint != 0.0 || exp.side != Side::Left)
    throw Error(ErrorKind::DomainError, "power_substituted: needs the singular endpoint at 0 on the left");
  SingularExpansion out{0.0, {}, Side::Left};
  for (const auto& t : exp.terms) out.terms.push_back({p * t.k + (p - 1.0), p * t.coeff});
  return out;
}

cplx change_of_variable_shift(const SingularExpansion& exp, const CoordinateJet& g) {
  if (g.taylor.empty() || g.taylor[0] == cplx(0.0))
    throw Error(ErrorKind::InsufficientJet, "change of variable needs g'(0) != 0");
  const cplx g1 = g.taylor[0];
  int depth = 1;
  for (const auto& t : exp.terms) {
    const double l = -t.k.real();
    if (t.k.imag() == 0.0 && l >= 1.0 && l == std::round(l) && t.coeff != cplx(0.0))
      depth = std::max(depth, static_cast<int>(l));
  }
  if (static_cast<int>(g.taylor.size()) < depth)
    throw Error(ErrorKind::InsufficientJet, "coordinate jet too short for the deepest pole");

  // u/g(u) = 1 / (g1 + g2 u + ...) up to u^{depth-1}
  std::vector<cplx> inv(depth, 0.0);
  inv[0] = 1.0 / g1;
  for (int n = 1; n < depth; ++n) {
    cplx s = 0.0;
    for (int j = 1; j <= n; ++j) s += g.taylor[j] * inv[n - j];
    inv[n] = -s / g1;
  }
  auto power_coeff = [&](int power, int order) {
    std::vector<cplx> acc(depth, 0.0);
    acc[0] = 1.0;
    for (int p = 0; p < power; ++p) {
      std::vector<cplx> next(depth, 0.0);
      for (int i = 0; i < depth; ++i)
        for (int j = 0; i + j < depth; ++j) next[i + j] += acc[i] * inv[j];
      acc = next;
    }
    return acc[order];
  };

  cplx shift = 0.0;
  for (const auto& t : exp.terms) {
    if (t.k.imag() != 0.0) continue;
    const double l = -t.k.real();
    if (l < 1.0 || l != std::round(l)) continue;
    const int li = static_cast<int>(l);
    if (li == 1)
      shift += t.coeff * std::log(1.0 / g1);
    else
      shift += t.coeff / static_cast<double>(li - 1) * power_coeff(li - 1, li - 1);
  }
  return shift;
}

}  // namespace pgf::genint
