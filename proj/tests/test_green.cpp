#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pgf/green.hpp"
#include "pgf/spectral.hpp"

using namespace pgf;
using oracle::rel;

TEST_CASE("elementary closed forms") {
  const auto s = SpectralPoint::from_beta(1.0);
  CHECK(rel(green_value(Geometry::euclidean(), 3, s, Separation::distance(1.0)), std::exp(-1.0) / (4 * pi)) < 1e-14);
  CHECK(rel(green_value(Geometry::hyperbolic(), 3, s, Separation::distance(1.0)), std::exp(-1.0) / (4 * pi * std::sinh(1.0))) < 1e-14);
  for (double b : {0.3, 1.0, 2.5})
    for (auto [t, tp] : {std::pair{0.3, 2.0}, std::pair{5.0, 1.0}}) {
      const double dth = std::abs(t - tp);
      const double want = std::cosh(b * (dth - pi)) / (2 * b * std::sinh(pi * b));
      CHECK(rel(green_value(Geometry::spherical(), 1, SpectralPoint::from_beta(b), Separation::on_circle(t, tp)), want) < 1e-13);
    }
  CHECK(rel(green_value(Geometry::euclidean(), 1, SpectralPoint::from_beta(2.0), Separation::distance(0.7)), std::exp(-1.4) / 4.0) < 1e-14);
}

TEST_CASE("both evaluation paths agree for odd d") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> r(0.1, 4.0), b(0.2, 3.0);
  for (auto kind : {GeometryKind::Euclidean, GeometryKind::Hyperbolic, GeometryKind::Spherical})
    for (int d : {1, 3, 5, 7})
      for (int k = 0; k < 5; ++k) {
        const auto s = SpectralPoint::from_beta(cplx(b(rng), 0.3 * b(rng)));
        const auto sep = Separation::distance(kind == GeometryKind::Spherical ? std::min(r(rng), 3.0) : r(rng));
        const Geometry g{kind, 1.0};
        CAPTURE(d);
        CHECK(rel(green_value(g, d, s, sep, EvalPath::Elementary), green_value(g, d, s, sep, EvalPath::Special)) < 1e-10);
      }
}

TEST_CASE("series regimes") {
  const auto s = SpectralPoint::from_beta(1.0);
  // d = 2 near-diagonal: G ~ -ln(r)/(2 pi)
  for (double r : {1e-3, 1e-5, 1e-7}) {
    const auto v = green_series(Geometry::euclidean(), 2, s, Separation::distance(r), Regime::NearDiagonal).value;
    CHECK(std::abs(v.real() / (-std::log(r) / (2 * pi)) - 1.0) < 0.2 / std::log(1.0 / r));
  }
  {
    const auto sep = Separation::distance(10.0);
    const auto far = green_series(Geometry::hyperbolic(), 5, s, sep, Regime::FarField).value;
    CHECK(rel(far, green_value(Geometry::hyperbolic(), 5, s, sep)) < 1e-6);
  }
  for (int d : {2, 3, 4}) {
    const auto anti = green_series(Geometry::spherical(), d, s, Separation::distance(pi), Regime::FarField);
    CHECK(std::isfinite(anti.value.real()));
    CHECK(rel(anti.value, green_value(Geometry::spherical(), d, s, Separation::distance(pi))) < 1e-10);
  }
  CHECK_THROWS_AS(green_series(Geometry::hyperbolic(), 3, s, Separation::distance(3.0), Regime::NearDiagonal), Error);
}

TEST_CASE("symmetry identities") {
  const auto s = SpectralPoint::from_beta(1.0);
  for (auto id : {Identity::EuclideanReflection, Identity::HyperbolicReflection, Identity::Homogeneity}) {
    auto [l, r] = symmetry_check(id, 3.0, s, 2.0, 2.0);
    CHECK(rel(l, r) < 1e-12);
    auto [l2, r2] = symmetry_check(id, 2.6, SpectralPoint::from_beta(cplx(0.8, 0.4)), 1.3, 3.0);
    CHECK(rel(l2, r2) < 1e-10);
  }
  // hyperbolic d = 3 from d = 1 by the closed forms: G^h_3 = G^h_1 / ((beta)_1 (2 pi sinh r))
  const double r = 1.0;
  const cplx g1 = green_value(Geometry::hyperbolic(), 1, s, Separation::distance(r));
  CHECK(rel(green_value(Geometry::hyperbolic(), 3, s, Separation::distance(r)), g1 / (1.0 * 2 * pi * std::sinh(r))) < 1e-13);
}

TEST_CASE("ODE in the chord variable") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> W(1.2, 10.0), C(-0.8, 0.8);
  for (int d : {2, 3, 4, 5}) {
    const double b = 1.3;
    const auto s = SpectralPoint::from_beta(b);
    const double c = 0.25 * (d - 1) * (d - 1);
    for (int k = 0; k < 5; ++k) {
      const double w = W(rng), h = 1e-3 * w;
      auto G = [&](double x) { return green_value(Geometry::hyperbolic(), d, s, Separation::distance(std::acosh(x))); };
      const cplx f0 = G(w), fp = G(w + h), fm = G(w - h), fp2 = G(w + 2 * h), fm2 = G(w - 2 * h);
      const cplx d1 = (fm2 - 8.0 * fm + 8.0 * fp - fp2) / (12 * h);
      const cplx d2 = (-fm2 + 16.0 * fm - 30.0 * f0 + 16.0 * fp - fp2) / (12 * h * h);
      const cplx res = (1 - w * w) * d2 - d * w * d1 + (b * b - c) * f0;
      CHECK(std::abs(res) < 1e-6 * (std::abs((1 - w * w) * d2) + std::abs(d * w * d1) + std::abs((b * b - c) * f0)));
      // sphere, w = cos(r)
      const double x = C(rng), hx = 1e-3;
      auto S = [&](double y) { return green_value(Geometry::spherical(), d, s, Separation::distance(std::acos(y))); };
      const cplx g0 = S(x), gp = S(x + hx), gm = S(x - hx), gp2 = S(x + 2 * hx), gm2 = S(x - 2 * hx);
      const cplx e1 = (gm2 - 8.0 * gm + 8.0 * gp - gp2) / (12 * hx);
      const cplx e2 = (-gm2 + 16.0 * gm - 30.0 * g0 + 16.0 * gp - gp2) / (12 * hx * hx);
      const cplx res2 = (1 - x * x) * e2 - d * x * e1 - (c + b * b) * g0;
      CHECK(std::abs(res2) < 1e-6 * (std::abs((1 - x * x) * e2) + std::abs(d * x * e1) + std::abs((c + b * b) * g0)));
    }
  }
}

TEST_CASE("curved kernels approach the flat one near the diagonal") {
  const auto s = SpectralPoint::from_beta(1.0);
  for (int d : {2, 3, 4})
    for (auto kind : {GeometryKind::Hyperbolic, GeometryKind::Spherical}) {
      std::vector<double> rs{0.1, 1e-2, 1e-3}, dev;
      for (double r : rs) {
        const cplx a = green_value({kind, 1.0}, d, s, Separation::distance(r));
        const cplx e = green_value(Geometry::euclidean(), d, s, Separation::distance(r));
        dev.push_back(std::abs(a / e - 1.0));
      }
      CHECK(dev.back() < dev.front());
      CHECK(dev.back() < 0.01);
    }
}

TEST_CASE("boundary values and the Stone formula") {
  for (double zeta : {0.5, 1.7})
    for (double r : {0.3, 2.0}) {
      const auto v = green_value(Geometry::euclidean(), 3, SpectralPoint::boundary_value(zeta, Boundary::PlusI0), Separation::distance(r));
      CHECK(std::abs(v.imag() - std::sin(zeta * r) / (4 * pi * r)) < 1e-14);
    }
  // d = 1: (1/2 pi i) int_a^b [G(s + i e) - G(s - i e)] ds -> P(a, b) on the diagonal
  const double a = 0.5, b = 2.0;
  auto stone = [&](double e) {
    auto f = [&](double x) {
      const cplx gp = green_value(Geometry::euclidean(), 1, SpectralPoint::from_z(cplx(x, e)), Separation::distance(0.0));
      const cplx gm = green_value(Geometry::euclidean(), 1, SpectralPoint::from_z(cplx(x, -e)), Separation::distance(0.0));
      return ((gp - gm) / (2.0 * pi * I)).real();
    };
    return oracle::simpson(f, a, b, 4000);
  };
  const double e1 = stone(2e-3), e2 = stone(1e-3);
  const double extrap = 2 * e2 - e1;
  CHECK(std::abs(extrap - projection_kernel(Geometry::euclidean(), 1, SpectralInterval{a, b}, Separation::distance(0.0))) < 1e-4);
}

TEST_CASE("resolvent derivative for d = 3") {
  // d/dz e^{-beta r}/(4 pi r) = e^{-beta r} / (8 pi beta)
  const double b = 1.2, r = 0.9;
  const cplx z = -b * b, h = 1e-5;
  auto G = [&](cplx zz) { return green_value(Geometry::euclidean(), 3, SpectralPoint::from_z(zz), Separation::distance(r)); };
  CHECK(rel((G(z + h) - G(z - h)) / (2.0 * h), std::exp(-b * r) / (8 * pi * b)) < 1e-6);
}

TEST_CASE("spectral projections") {
  for (double r : {0.0, 1.0, 2.5})
    CHECK(std::abs(projection_kernel(Geometry::spherical(), 2, SphereLevel{0}, Separation::distance(r)) - 1 / (4 * pi)) < 1e-15);
  for (int d : {1, 2, 3, 4, 5})
    for (int l : {0, 1, 3}) {
      const double R = 1.7;
      const auto lev = unperturbed_spectrum(d, R, l);
      const double diag = projection_kernel(Geometry::spherical(R), d, SphereLevel{l}, Separation::distance(0.0));
      CHECK(rel(diag * sphere_area(d) * std::pow(R, d), double(lev.multiplicity)) < 1e-12);
    }
  CHECK(rel(projection_kernel(Geometry::euclidean(), 1, SpectralInterval{0.0, 2.0}, Separation::distance(0.0)), std::sqrt(2.0) / pi) < 1e-12);
  // d = 3 Euclidean: kernel of [0, b) is (sin(k r) - k r cos(k r)) / (2 pi^2 r^3), k = sqrt(b)
  const double k = 1.5, r = 0.8;
  CHECK(rel(projection_kernel(Geometry::euclidean(), 3, SpectralInterval{0.0, k * k}, Separation::distance(r)),
            (std::sin(k * r) - k * r * std::cos(k * r)) / (2 * pi * pi * r * r * r)) < 1e-10);
}

TEST_CASE("sphere kernels refuse the eigenvalues") {
  const double R = 2.0;
  const double e = unperturbed_spectrum(3, R, 1).eigenvalue;
  CHECK_THROWS_AS(green_value(Geometry::spherical(R), 3, SpectralPoint::from_z(e), Separation::distance(0.5)), Error);
}
