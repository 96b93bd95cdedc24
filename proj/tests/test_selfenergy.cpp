#include <doctest.h>

#include <boost/math/special_functions/trigamma.hpp>

#include "oracles.hpp"
#include "pgf/selfenergy.hpp"

using namespace pgf;
using oracle::rel;

namespace {

constexpr GeometryKind kinds[] = {GeometryKind::Euclidean, GeometryKind::Hyperbolic, GeometryKind::Spherical};

SelfEnergySpec spec_of(GeometryKind k, int d, Flavor f = Flavor::Reference, double eps = 0.0) {
  if (d % 2 == 0 && f == Flavor::Reference) f = Flavor::ReferenceEps;
  return {Geometry{k, 1.0}, d, f, eps};
}

// Divided differences of y at nodes x; the last entry is the top one.
double top_divided_difference(std::vector<double> x, std::vector<double> y) {
  for (size_t k = 1; k < x.size(); ++k)
    for (size_t i = x.size() - 1; i >= k; --i) y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - k]);
  return y.back();
}

}  // namespace

TEST_CASE("densities in closed form") {
  const double b = 1.3;
  const auto s = SpectralPoint::from_beta(b);
  CHECK(rel(sigma_density(spec_of(GeometryKind::Euclidean, 3), s), 1.0 / (8 * pi * b)) < 1e-14);
  CHECK(rel(sigma_density(spec_of(GeometryKind::Hyperbolic, 2), s), boost::math::trigamma(0.5 + b) / (4 * pi * b)) < 1e-13);
  const double want = pi / (4 * b * b * std::pow(std::sinh(pi * b), 2)) + std::cosh(pi * b) / (4 * b * b * b * std::sinh(pi * b));
  CHECK(rel(sigma_density(spec_of(GeometryKind::Spherical, 1), s), want) < 1e-13);
}

TEST_CASE("reference self-energies") {
  for (double b : {0.4, 1.0, 2.2})
    CHECK(rel(reference_sigma(spec_of(GeometryKind::Spherical, 1), SpectralPoint::from_beta(b)), -1.0 / (std::tanh(pi * b) * 2 * b)) < 1e-14);
  for (double eps : {0.0, 0.7}) {
    const cplx v = reference_sigma(spec_of(GeometryKind::Euclidean, 2, Flavor::ReferenceEps, eps), SpectralPoint::from_beta(1.0));
    CHECK(std::abs(v + eps / (2 * pi)) < 1e-15);
  }
  const double c5 = pi / (std::pow(4 * pi, 2.5) * 0.75 * std::sqrt(pi));
  CHECK(rel(reference_sigma(spec_of(GeometryKind::Hyperbolic, 5), SpectralPoint::from_beta(2.0)), c5 * 2.0 * -3.0) < 1e-13);
  // normalizations
  CHECK(std::abs(reference_sigma(spec_of(GeometryKind::Euclidean, 1), SpectralPoint::from_beta(1e8))) < 1e-7);
  CHECK(std::abs(reference_sigma(spec_of(GeometryKind::Spherical, 1), SpectralPoint::from_beta(1e8))) < 1e-7);
  CHECK(std::abs(reference_sigma(spec_of(GeometryKind::Euclidean, 3), SpectralPoint::from_beta(1e-12))) < 1e-12);
}

TEST_CASE("flavor validation") {
  CHECK_THROWS_AS((SelfEnergySpec{Geometry::euclidean(), 3, Flavor::ReferenceEps, 0.0}).validate(), Error);
  CHECK_THROWS_AS((SelfEnergySpec{Geometry::euclidean(), 2, Flavor::Reference, 0.0}).validate(), Error);
  CHECK_THROWS_AS((SelfEnergySpec{Geometry::hyperbolic(), 2, Flavor::MinimalSubtraction, 0.0}).validate(), Error);
}

TEST_CASE("minus the z-derivative of Sigma is sigma") {
  for (auto k : kinds)
    for (int d = 1; d <= 8; ++d)
      for (auto f : {Flavor::Reference, Flavor::ReferenceEps, Flavor::MinimalSubtraction}) {
        SelfEnergySpec sp{Geometry{k, 1.0}, d, f, 0.3};
        try {
          sp.validate();
        } catch (const Error&) {
          continue;
        }
        for (double b : {0.7, 1.3, 2.9}) {
          const cplx z = -b * b, h = 1e-5 * std::abs(z);
          const cplx fd = -(reference_sigma(sp, SpectralPoint::from_z(z + h)) - reference_sigma(sp, SpectralPoint::from_z(z - h))) / (2.0 * h);
          CAPTURE(d);
          CAPTURE(int(k));
          CAPTURE(int(f));
          CHECK(rel(fd, sigma_density(sp, SpectralPoint::from_beta(b))) < 1e-5);
        }
      }
}

TEST_CASE("direct quadrature of G squared") {
  for (auto k : kinds)
    for (int d : {1, 2, 3})
      for (double b : {0.5, 1.0, 2.0}) {
        const auto s = SpectralPoint::from_beta(b);
        CHECK(rel(sigma_quadrature({k, 1.0}, d, s), sigma_density(spec_of(k, d), s)) < 1e-7);
      }
}

TEST_CASE("coincidences between geometries") {
  for (double b : {0.3, 1.0, 4.0}) {
    const auto s = SpectralPoint::from_beta(b);
    CHECK(rel(reference_sigma(spec_of(GeometryKind::Hyperbolic, 1), s), reference_sigma(spec_of(GeometryKind::Euclidean, 1), s)) < 1e-14);
    CHECK(rel(reference_sigma(spec_of(GeometryKind::Hyperbolic, 3), s), reference_sigma(spec_of(GeometryKind::Euclidean, 3), s)) < 1e-14);
  }
  double prev = 1.0;
  for (double b : {2.0, 4.0, 6.0}) {
    const auto s = SpectralPoint::from_beta(b);
    const double diff = std::abs(reference_sigma(spec_of(GeometryKind::Spherical, 3), s) - reference_sigma(spec_of(GeometryKind::Euclidean, 3), s));
    CHECK(diff < 2.0 * b * std::exp(-2 * pi * b));
    CHECK(diff < prev);
    prev = diff;
  }
}

TEST_CASE("minimal subtraction") {
  for (auto k : {GeometryKind::Hyperbolic, GeometryKind::Spherical})
    for (int d : {4, 6, 8}) CHECK(ms_correction(k, d)(0.0) == cplx(0.0));
  const Polynomial p4 = ms_correction_density(GeometryKind::Hyperbolic, 4);
  REQUIRE(p4.degree() == 0);
  CHECK(std::abs(p4.coeffs[0] + 2 * euler_gamma) < 1e-14);
  CHECK(std::abs(ms_correction(GeometryKind::Hyperbolic, 4)(1.0) - 2 * euler_gamma) < 1e-14);
  const double b = 1.3;
  const cplx z = -b * b, h = 1e-5 * std::abs(z);
  const cplx fd = -(ms_sigma_even(GeometryKind::Hyperbolic, 4, SpectralPoint::from_z(z + h)) -
                    ms_sigma_even(GeometryKind::Hyperbolic, 4, SpectralPoint::from_z(z - h))) / (2.0 * h);
  CHECK(rel(fd, anomalous_sigma(GeometryKind::Hyperbolic, 4, SpectralPoint::from_beta(b))) < 1e-6);
  for (auto k : {GeometryKind::Hyperbolic, GeometryKind::Spherical})
    for (int d : {4, 6})
      CHECK(rel(anomalous_sigma(k, d, SpectralPoint::from_beta(0.9)), sigma_density(spec_of(k, d, Flavor::MinimalSubtraction), SpectralPoint::from_beta(0.9))) < 1e-12);
}

TEST_CASE("the eps family absorbs the top coefficient of the ms difference") {
  for (auto k : {GeometryKind::Hyperbolic, GeometryKind::Spherical})
    for (int d : {4, 6}) {
      const int top = (d - 2) / 2;
      const double C = self_energy_normalization(d);
      const Polynomial P = eps_polynomial(k, d);
      REQUIRE(P.degree() == top);
      std::vector<double> zs, D;
      for (int i = 0; i <= top + 1; ++i) {
        const double b = 0.8 + 0.45 * i;
        const auto s = SpectralPoint::from_beta(b);
        zs.push_back(-b * b);
        D.push_back((ms_sigma_even(k, d, s) - reference_sigma(spec_of(k, d, Flavor::ReferenceEps, 0.0), s)).real());
      }
      // D is a polynomial of degree top
      CHECK(std::abs(top_divided_difference(zs, D)) < 1e-9);
      std::vector<double> z0(zs.begin(), zs.end() - 1), d0(D.begin(), D.end() - 1);
      const double lead = top_divided_difference(z0, d0);
      const double eps = -lead * C / (2.0 * P.coeffs.back());
      // Sigma^ms = Sigma^eps + eta with deg eta < top
      std::vector<double> eta;
      for (double z : z0) {
        const auto s = SpectralPoint::from_z(z);
        eta.push_back((ms_sigma_even(k, d, s) - reference_sigma(spec_of(k, d, Flavor::ReferenceEps, eps), s)).real());
      }
      CHECK(std::abs(top_divided_difference(z0, eta)) < 1e-9);
    }
}

TEST_CASE("radius scaling") {
  const auto s = SpectralPoint::from_beta(0.8);
  for (auto k : kinds)
    for (int d : {1, 2, 3, 4, 5}) {
      const auto sp = spec_of(k, d, Flavor::Reference, 0.2);
      CHECK(rel(scaled_sigma(sp, 1.0, s), reference_sigma(sp, s)) < 1e-15);
    }
  for (double R : {0.5, 3.0, 40.0})
    CHECK(rel(scaled_sigma(spec_of(GeometryKind::Hyperbolic, 3), R, s), 0.8 / (4 * pi)) < 1e-13);
  // d = 2 hyperbolic approaches the flat (ln beta - eps) / (2 pi)
  const double eps = 0.4;
  double prev = 1.0;
  for (double R : {10.0, 100.0, 1000.0}) {
    const double dev = std::abs(scaled_sigma(spec_of(GeometryKind::Hyperbolic, 2, Flavor::ReferenceEps, eps), R, s) - (std::log(0.8) - eps) / (2 * pi));
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 1e-3);
}
