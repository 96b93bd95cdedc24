#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "pgf/perturbed.hpp"

using namespace pgf;
using oracle::rel;

namespace {

using Vec = std::array<double, 3>;

double dist(const Vec& a, const Vec& b, int d) {
  double s = 0;
  for (int i = 0; i < d; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Perturbed kernel on R^d with the point at the origin.
cplx flat_kernel(int d, const PerturbationSpec& p, const SpectralPoint& s, const Vec& x, const Vec& xp) {
  const Vec o{0, 0, 0};
  return perturbed_green(Geometry::euclidean(), d, p, s, Separation::distance(dist(x, o, d)), Separation::distance(dist(xp, o, d)),
                         Separation::distance(dist(x, xp, d)));
}

}  // namespace

TEST_CASE("full self-energy") {
  const auto f = full_self_energy(Geometry::euclidean(), 3, PerturbationSpec::low_dim_gamma(0.5), SpectralPoint::from_beta(1.0));
  CHECK(f.state == FullSelfEnergy::State::Finite);
  CHECK(rel(f.value, 0.5 + 1 / (4 * pi)) < 1e-15);
  for (double eps : {0.0, 0.6}) {
    const auto p = PerturbationSpec::low_dim_eps(eps);
    CHECK(rel(full_self_energy(Geometry::euclidean(), 2, p, SpectralPoint::from_beta(2.0)).value, (std::log(2.0) - eps) / (2 * pi)) < 1e-14);
    CHECK(std::abs(full_self_energy(Geometry::euclidean(), 2, p, SpectralPoint::from_beta(std::exp(eps))).value) < 1e-16);
  }
  const auto h5 = full_self_energy(Geometry::hyperbolic(), 5, PerturbationSpec::odd_gamma({{0.0, 1.0}}), SpectralPoint::from_beta(1.0));
  CHECK(std::abs(h5.value + 1.0) < 1e-15);
  CHECK(full_self_energy(Geometry::euclidean(), 3, PerturbationSpec::unperturbed(), SpectralPoint::from_beta(1.0)).state ==
        FullSelfEnergy::State::Infinite);
}

TEST_CASE("perturbation modes must fit the dimension") {
  CHECK_THROWS_AS(PerturbationSpec::odd_gamma({{1.0}}).validate(4), Error);
  CHECK_THROWS_AS(PerturbationSpec::odd_gamma({{1.0, 1.0, 1.0}}).validate(5), Error);
  CHECK_NOTHROW(PerturbationSpec::odd_gamma({{1.0, 1.0, 1.0}}).validate(7));
  CHECK_THROWS_AS(PerturbationSpec::even_eps_eta(0.0, {{1.0, 1.0}}).validate(4), Error);
  CHECK_NOTHROW(PerturbationSpec::even_eps_eta(0.0, {{1.0, 1.0}}).validate(6));
  CHECK_THROWS_AS(PerturbationSpec::low_dim_eps(0.0).validate(3), Error);
  CHECK_THROWS_AS(PerturbationSpec::low_dim_gamma(1.0).validate(2), Error);
}

TEST_CASE("perturbed kernels") {
  const auto s = SpectralPoint::from_beta(1.2);
  const auto sx = Separation::distance(0.4), sxp = Separation::distance(1.1), sxx = Separation::distance(0.9);
  for (auto g : {Geometry::euclidean(), Geometry::hyperbolic(), Geometry::spherical(2.0)})
    CHECK(perturbed_green(g, 3, PerturbationSpec::unperturbed(), s, sx, sxp, sxx) == green_value(g, 3, s, sxx));
  // d = 1 on the line
  const double b = 1.2, gam = 0.8, x = 0.4, xp = -0.7;
  const cplx want = std::exp(-b * std::abs(x - xp)) / (2 * b) +
                    std::exp(-b * std::abs(x)) * std::exp(-b * std::abs(xp)) / (4 * b * b * (gam - 1 / (2 * b)));
  CHECK(rel(perturbed_green(Geometry::euclidean(), 1, PerturbationSpec::low_dim_gamma(gam), s, Separation::on_line(x, 0.0),
                            Separation::on_line(xp, 0.0), Separation::on_line(x, xp)),
            want) < 1e-14);
  // bound state for d = 3 at beta = 1/a
  const double a = 0.5;
  const auto p = from_scattering_length(3, a);
  CHECK_THROWS_AS(perturbed_green(Geometry::euclidean(), 3, p, SpectralPoint::from_beta(1 / a), sx, sxp, sxx), Error);
  CHECK(std::abs(full_self_energy(Geometry::euclidean(), 3, p, SpectralPoint::from_beta(1 / a)).value) < 1e-15);
}

TEST_CASE("symmetry in the two arguments") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> r(0.1, 2.5);
  const PerturbationSpec specs[] = {PerturbationSpec::low_dim_gamma(0.3), PerturbationSpec::low_dim_eps(0.2),
                                    PerturbationSpec::odd_gamma({{0.1, 0.2}}), PerturbationSpec::even_eps_eta(0.5, {{0.4}})};
  const int dims[] = {3, 2, 5, 4};
  for (int i = 0; i < 4; ++i)
    for (auto g : {Geometry::euclidean(), Geometry::hyperbolic(), Geometry::spherical()})
      for (int k = 0; k < 5; ++k) {
        const auto a = Separation::distance(r(rng)), b = Separation::distance(r(rng)), c = Separation::distance(r(rng));
        const auto s = SpectralPoint::from_beta(cplx(0.9, 0.2));
        CHECK(perturbed_green(g, dims[i], specs[i], s, a, b, c) == perturbed_green(g, dims[i], specs[i], s, b, a, c));
      }
}

TEST_CASE("resolvent identity on the line") {
  const auto p = PerturbationSpec::low_dim_gamma(-0.9);
  const double x = 0.5, xp = -0.3;
  const cplx z(-1.1, 0.3), h = 1e-5;
  auto G = [&](cplx zz, double a, double c) {
    return perturbed_green(Geometry::euclidean(), 1, p, SpectralPoint::from_z(zz), Separation::on_line(a, 0.0),
                           Separation::on_line(c, 0.0), Separation::on_line(a, c));
  };
  const cplx lhs = (G(z + h, x, xp) - G(z - h, x, xp)) / (2.0 * h);
  // kinks at xp, 0, x
  const double knots[] = {-30.0, xp, 0.0, x, 30.0};
  cplx rhs = 0.0;
  for (int k = 0; k < 4; ++k)
    rhs += oracle::simpson([&](double y) { return G(z, x, y) * G(z, y, xp); }, knots[k], knots[k + 1], 20000);
  CHECK(rel(lhs, rhs) < 1e-5);
}

TEST_CASE("Helmholtz equation away from the point and the source") {
  const double h = 1e-3;
  for (int d : {2, 3}) {
    const auto p = d == 2 ? PerturbationSpec::low_dim_eps(0.3) : PerturbationSpec::low_dim_gamma(-0.05);
    const cplx z = -0.81;
    const auto s = SpectralPoint::from_z(z);
    const Vec x{0.7, 0.2, -0.3}, xp{-0.4, 0.5, 0.9};
    const cplx g0 = flat_kernel(d, p, s, x, xp);
    cplx lap = 0.0;
    for (int i = 0; i < d; ++i) {
      Vec a = x, b = x, a2 = x, b2 = x;
      a[i] += h, b[i] -= h, a2[i] += 2 * h, b2[i] -= 2 * h;
      const cplx fa = flat_kernel(d, p, s, a, xp), fb = flat_kernel(d, p, s, b, xp);
      const cplx fa2 = flat_kernel(d, p, s, a2, xp), fb2 = flat_kernel(d, p, s, b2, xp);
      lap += (-fa2 + 16.0 * fa - 30.0 * g0 + 16.0 * fb - fb2) / (12 * h * h);
    }
    CHECK(std::abs(-lap - z * g0) < 1e-4 * std::max(std::abs(lap), std::abs(z * g0)));
  }
}

TEST_CASE("homogeneity of the zero-coupling kernels") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> L(0.3, 3.0), B(0.3, 2.0), R(0.2, 2.0);
  for (int d : {3, 5, 7}) {
    const auto p = d == 3 ? PerturbationSpec::low_dim_gamma(0.0) : PerturbationSpec::odd_gamma({});
    for (int k = 0; k < 5; ++k) {
      const double lam = L(rng), b = B(rng), r1 = R(rng), r2 = R(rng), r3 = 0.5 * (r1 + r2);
      const cplx lhs = perturbed_green(Geometry::euclidean(), d, p, SpectralPoint::from_beta(lam * b), Separation::distance(r1 / lam),
                                       Separation::distance(r2 / lam), Separation::distance(r3 / lam));
      const cplx rhs = perturbed_green(Geometry::euclidean(), d, p, SpectralPoint::from_beta(b), Separation::distance(r1),
                                       Separation::distance(r2), Separation::distance(r3));
      CHECK(rel(lhs, std::pow(lam, d - 2.0) * rhs) < 1e-12);
    }
  }
}

TEST_CASE("scattering lengths") {
  CHECK(scattering_length(1, PerturbationSpec::low_dim_gamma(-0.5)) == 1.0);
  CHECK(scattering_length(2, PerturbationSpec::low_dim_eps(0.0)) == 1.0);
  CHECK(rel(scattering_length(3, PerturbationSpec::low_dim_gamma(0.2)), -1 / (4 * pi * 0.2)) < 1e-15);
  const double g0 = 0.7;
  CHECK(rel(scattering_length(5, PerturbationSpec::odd_gamma({{g0, 3.0}})), -std::tgamma(1.5) / (4 * std::pow(pi, 2.5) * g0)) < 1e-14);
  for (int d : {1, 2, 3, 4, 5, 6, 7})
    for (double a : {0.3, 2.0}) CHECK(rel(scattering_length(d, from_scattering_length(d, a)), a) < 1e-14);
  CHECK_THROWS_AS(scattering_length(5, PerturbationSpec::odd_gamma({{0.0, 1.0}})), Error);
  CHECK_THROWS_AS(from_scattering_length(3, 0.0), Error);
}
