#include <cmath>

#include "ck/errors.hpp"
#include "ck/geometry.hpp"
#include "ck/sphere.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ck::sphere;
using ck::pi;

namespace {

// Eigenfunction expansions of the heat kernels of the Laplacian on 𝕊² and
// 𝕊³, independent of every representation under test.
double legendre_s2(double t, double phi) {
  double sum = 0.0;
  for (unsigned l = 0; l < 400; ++l)
    sum += (2 * l + 1) / (4 * pi) * std::exp(-double(l) * (l + 1) * t) * std::legendre(l, std::cos(phi));
  return sum;
}

double chebyshev_s3(double t, double phi) {
  double sum = 0.0;
  for (int l = 0; l < 400; ++l) {
    const double u = phi == 0.0 ? l + 1.0
                     : phi == pi ? (l % 2 ? -1.0 : 1.0) * (l + 1)
                                 : std::sin((l + 1) * phi) / std::sin(phi);
    sum += (l + 1) * u / (2 * pi * pi) * std::exp(-double(l) * (l + 2) * t);
  }
  return sum;
}

double theta1_mass(double t) {
  return ck::integrate_adaptive([t](double p) { return heat_theta_1(t, p); }, 0, 2 * pi, 1e-13).value;
}

}  // namespace

TEST_CASE("wrapped Gaussian") {
  for (double t : {0.1, 1.0, 10.0}) CHECK(std::abs(theta1_mass(t) - 1) < 1e-12);
  // Small t: only the nearest image matters.
  CHECK(rel_diff(heat_theta_1(0.01, 1.0), std::exp(-25.0) / std::sqrt(0.04 * pi)) < 1e-12);
  // Large t: equidistribution.
  CHECK(std::abs(heat_theta_1(50, 1.0) - 1 / (2 * pi)) < 1e-8);
  for (double p : {0.0, 0.4, 1.7, 3.0}) CHECK(heat_theta_1(0.8, p) == doctest::Approx(heat_theta_1(0.8, 2 * pi - p)).epsilon(1e-15));
  CHECK_THROWS_AS(heat_theta_1(0.0, 1.0), ck::DomainError);
}

TEST_CASE("two-sphere kernel against the Legendre expansion") {
  for (double t : {0.1, 0.5, 1.0, 3.0})
    for (double p : {0.0, 0.2, 1.0, 2.0, 2.9, pi}) {
      // The eigen-series cancels down to ~1e-16 of its peak value, which
      // limits the oracle where the kernel itself is far below the peak.
      const double ref = legendre_s2(t, p) * std::exp(-t / 4);
      const double peak = legendre_s2(t, 0.0);
      CHECK(std::abs(heat_theta_2(t, p).value - ref) <= 1e-9 * ref + 1e-15 * peak);
    }
  CHECK_THROWS_AS(heat_theta_2(1.0, 3.5), ck::DomainError);
}

TEST_CASE("two-sphere kernel: mass, small-time limit, positivity") {
  auto mass = [](double t) {
    return ck::integrate_adaptive([t](double p) { return heat_theta_2(t, p).value * 2 * pi * std::sin(p); }, 0, pi, 1e-11).value;
  };
  // The representation solves ∂_t u = (Δ − 1/4)u, so its mass is e^{−t/4}.
  CHECK(std::abs(mass(1.0) - std::exp(-0.25)) < 1e-9);
  CHECK(std::abs(mass(0.3) - std::exp(-0.075)) < 1e-9);
  // Small t: the flat kernel times the van Vleck factor (φ/sin φ)^{1/2}.
  const double e2 = std::exp(-0.25 / 0.04) / (0.04 * pi) * std::sqrt(0.5 / std::sin(0.5));
  CHECK(std::abs(heat_theta_2(0.01, 0.5).value / e2 - 1) < 1e-3);
  const double e3 = std::exp(-0.25 / 0.004) / (0.004 * pi) * std::sqrt(0.5 / std::sin(0.5));
  CHECK(std::abs(heat_theta_2(0.001, 0.5).value / e3 - 1) < 1e-4);
  for (double t : {0.05, 0.5, 5.0})
    for (double p = 0.0; p <= pi; p += 0.25) CHECK(heat_theta_2(t, p).value > 0);
}

TEST_CASE("raising on the sphere") {
  for (double t : {0.2, 1.0})
    for (double p : {0.0, 0.5, 1.0, 2.0, 3.0, pi}) {
      CHECK(rel_diff(heat_raise({1, t, p}).value, heat_theta_1(t, p)) < 1e-14);
      CHECK(rel_diff(heat_raise({3, t, p}).value, chebyshev_s3(t, p) * std::exp(-t)) < 1e-10);
    }
  // One hand differentiation of the wrapped series (the residue-type formula).
  const double t = 1, p = 1;
  double d = 0;
  for (int m = -5; m <= 5; ++m) {
    const double a = p + 2 * pi * m;
    d += -a / (2 * t) * std::exp(-a * a / (4 * t));
  }
  const double hand = -d / std::sqrt(4 * pi * t) / (2 * pi * std::sin(p));
  CHECK(rel_diff(heat_raise({3, t, p}).value, hand) < 1e-13);
  // n = 3 mass is e^{−t} in this convention; 1 after the convention factor.
  const double m3 = ck::integrate_adaptive([](double q) { return heat_raise({3, 0.5, q}).value * 4 * pi * std::sin(q) * std::sin(q); }, 0, pi, 1e-11).value;
  CHECK(std::abs(m3 - std::exp(-0.5)) < 1e-9);
  CHECK(std::abs(m3 * ck::convention_factor(ck::Space::sphere(), 3, 0.5, ck::Convention::markovian) - 1) < 1e-9);
}

TEST_CASE("even dimensions via the two-sphere generator") {
  // n = 4 from H₂ raised once; compare with a finite-difference of H₂.
  const double t = 0.7, h = 1e-4;
  for (double p : {0.3, 1.2, 2.5}) {
    const double fd = -(heat_theta_2(t, p + h).value - heat_theta_2(t, p - h).value) / (2 * h) / (2 * pi * std::sin(p));
    CHECK(rel_diff(heat_raise({4, t, p}).value, fd) < 1e-6);
  }
  // Poles: antipode by the pole series, origin by extrapolation.
  CHECK(rel_diff(heat_raise({4, t, pi}).value, heat_raise({4, t, pi - 2e-3}).value) < 1e-5);
  CHECK(rel_diff(heat_raise({4, t, 0.0}).value, heat_raise({4, t, 2e-3}).value) < 1e-5);
}

TEST_CASE("closed-form Poisson kernel") {
  const double m1 = ck::integrate_adaptive([](double p) { return poisson_closed({1, 1.0, std::abs(p)}); }, -pi, pi, 1e-12).value;
  CHECK(std::abs(m1 - 1) < 1e-11);
  CHECK(std::abs(poisson_closed({1, 30.0, 1.0}) - 1 / (2 * pi)) < 1e-12);
  CHECK(rel_diff(poisson_closed({2, 1.0, 0.0}), std::tgamma(1.5) / std::pow(pi, 1.5) * std::sinh(1.0) / std::pow(2 * std::cosh(1.0) - 2, 1.5)) < 1e-14);
  CHECK_THROWS_AS(poisson_closed({1, -1.0, 1.0}), ck::DomainError);
}

TEST_CASE("doubling identities") {
  using V = DoublingVariant;
  CHECK(rel_diff(poisson_doubling(1, 1.0, 1.0, V::cosine).value, poisson_closed({1, 1.0, 1.0})) < 1e-8);
  CHECK(rel_diff(poisson_doubling(2, 0.5, 2.0, V::angle).value, poisson_closed({2, 0.5, 2.0})) < 1e-8);
  const auto a = poisson_doubling(1, 2.0, 0.3, V::cosine), b = poisson_doubling(1, 2.0, 0.3, V::angle);
  CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate + 1e-14 * std::abs(a.value));
  for (int n = 1; n <= 3; ++n)
    for (double y : {0.3, 1.0, 2.5})
      for (double p : {0.0, 0.7, 2.0, 3.1}) {
        const double ref = poisson_closed({n, y, p});
        CHECK(rel_diff(poisson_doubling(n, y, p, V::cosine).value, ref) < 1e-9);
        CHECK(rel_diff(poisson_doubling(n, y, p, V::angle).value, ref) < 1e-9);
      }
  CHECK(rel_diff(poisson_doubling(2, 1.0, pi, V::cosine).value, poisson_closed({2, 1.0, pi})) < 1e-9);
  CHECK_THROWS_AS(poisson_doubling(2, 1.0, pi, V::angle), ck::DomainError);
}

TEST_CASE("Poisson raising") {
  CHECK(rel_diff(poisson_raise({3, 1.0, 1.0}).value, poisson_closed({3, 1.0, 1.0})) < 1e-13);
  CHECK(rel_diff(poisson_raise({1, 1.0, 1.0}).value, poisson_closed({1, 1.0, 1.0})) < 1e-15);
  CHECK(rel_diff(poisson_raise({5, 0.7, 2.0}).value, poisson_closed({5, 0.7, 2.0})) < 1e-8);
  for (int n = 1; n <= 6; ++n)
    for (double p : {0.0, 1e-4, 0.6, 1.6, 3.0, pi})
      CHECK(rel_diff(poisson_raise({n, 0.8, p}).value, poisson_closed({n, 0.8, p})) < 1e-9);
}

TEST_CASE("spherical Bromwich contour") {
  CHECK(rel_diff(heat_gruet(1, 1.0, 1.0, ck::ContourSpec::gaussian(1.0, 1.0, 1.0)).value, heat_theta_1(1.0, 1.0)) < 1e-9);
  CHECK(rel_diff(heat_gruet(3, 0.5, 1.5, ck::ContourSpec::gaussian(1.0, 0.5, 1.5)).value, heat_raise({3, 0.5, 1.5}).value) < 1e-9);
  for (int n = 1; n <= 5; ++n)
    for (double t : {0.1, 1.0, 4.0})
      for (double p : {0.2, 1.5, 2.9})
        CHECK(rel_diff(heat_gruet(n, t, p).value, heat_raise({n, t, p}).value) < 1e-8);
  const auto a = heat_gruet(2, 0.6, 1.0, ck::ContourSpec::gaussian(0.8, 0.6, 1.0));
  const auto b = heat_gruet(2, 0.6, 1.0, ck::ContourSpec::gaussian(1.6, 0.6, 1.0));
  CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate);
  CHECK_THROWS_AS(heat_gruet(2, 0.6, 1.0, ck::ContourSpec::gaussian(-0.5, 0.6, 1.0)), ck::ContourError);
}

TEST_CASE("circle kernel: image sum and Fourier series meet at t = 1") {
  for (double phi : {0.0, 0.7, 2.0, pi}) {
    const double below = heat_theta_1(std::nextafter(1.0, 0.0), phi);
    const double above = heat_theta_1(std::nextafter(1.0, 2.0), phi);
    CHECK(rel_diff(below, above) < 1e-14);
    const ck::Jet a = heat_theta_1_jet(std::nextafter(1.0, 0.0), phi, 4);
    const ck::Jet b = heat_theta_1_jet(std::nextafter(1.0, 2.0), phi, 4);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-13);
  }
  CHECK(rel_diff(heat_theta_1(50.0, 1.0), 1 / (2 * pi)) < 1e-15);
}

TEST_CASE("two-sphere kernel at large times") {
  for (double t : {1.5, 10.0, 100.0})
    for (double p : {0.0, 0.2, 2.0, pi}) CHECK(rel_diff(heat_theta_2(t, p).value, legendre_s2(t, p) * std::exp(-t / 4)) < 1e-12);
  // the markovian normalisation tends to 1/4π without 0·∞
  CHECK(rel_diff(heat_theta_2(1e4, 1.0, 1e-10, 1e4 / 4).value, 1 / (4 * pi)) < 1e-14);
  const ck::Jet a = heat_theta_2_jet(std::nextafter(1.0, 0.0), 0.8, 3);
  const ck::Jet b = heat_theta_2_jet(std::nextafter(1.0, 2.0), 0.8, 3);
  for (int k = 0; k <= 3; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9 * std::abs(a[0]));
  for (double t : {0.01, 3.0}) CHECK(rel_diff(heat_raise({4, t, 0.0}).value, heat_gruet(4, t, 0.0).value) < 1e-9);
}
