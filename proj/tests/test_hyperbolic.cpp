#include <cmath>

#include "ck/errors.hpp"
#include "ck/geometry.hpp"
#include "ck/hyperbolic.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ck::hyperbolic;
using ck::pi;

namespace {

double g0(double t, double r) { return std::exp(-r * r / (4 * t)) / std::sqrt(4 * pi * t); }
double g1(double t, double r) { return -r / (2 * t) * g0(t, r); }
double g2(double t, double r) { return (r * r / (4 * t * t) - 1 / (2 * t)) * g0(t, r); }

double h3(double t, double r) {
  return std::pow(4 * pi * t, -1.5) * (r == 0 ? 1.0 : r / std::sinh(r)) * std::exp(-r * r / (4 * t));
}

}  // namespace

TEST_CASE("odd dimensions by raising") {
  CHECK(rel_diff(heat_raise_odd({3, 1, 1}).value, std::pow(4 * pi, -1.5) / std::sinh(1.0) * std::exp(-0.25)) < 1e-13);
  CHECK(rel_diff(heat_raise_odd({1, 0.7, 1.4}).value, g0(0.7, 1.4)) < 1e-15);
  // Second application by hand.
  const double t = 0.5, r = 2, w = std::sinh(r), dw = std::cosh(r);
  const double hand = (g2(t, r) / w - g1(t, r) * dw / (w * w)) / (4 * pi * pi * w);
  CHECK(rel_diff(heat_raise_odd({5, t, r}).value, hand) < 1e-10);
  for (double r2 : {0.0, 1e-4, 0.3, 2.0, 5.0}) CHECK(rel_diff(heat_raise_odd({3, 0.9, r2}).value, h3(0.9, r2)) < 1e-12);
  CHECK_THROWS_AS(heat_raise_odd({2, 1, 1}), ck::DomainError);
}

TEST_CASE("even dimensions by descent") {
  const double iv = heat_descent_even({2, 1, 1}, EvenVariant::outside).value;
  const double v = heat_descent_even({2, 1, 1}, EvenVariant::inside).value;
  CHECK(rel_diff(iv, v) < 1e-8);
  for (double t : {0.3, 1.5})
    for (double r : {0.2, 1.0, 3.0}) {
      const double a = heat_descent_even({4, t, r}, EvenVariant::outside).value;
      const double b = heat_descent_even({4, t, r}, EvenVariant::inside).value;
      CHECK(rel_diff(a, b) < 1e-8);
    }
  for (double t : {0.1, 1.0, 5.0})
    for (double r : {0.1, 1.0, 2.5, 5.0}) {
      CHECK(heat_descent_even({2, t, r}).value > 0);
      CHECK(heat_descent_even({4, t, r}).value > 0);
    }
  CHECK_THROWS_AS(heat_descent_even({3, 1, 1}), ck::DomainError);
}

TEST_CASE("descent identity has constant one") {
  // From the even kernel H₄ down to the raised H₃, and from H₃ to H₂.
  CHECK(rel_diff(heat_descent(3, 1.0, 1.0).value, heat_raise_odd({3, 1.0, 1.0}).value) < 1e-7);
  for (double t : {0.2, 1.0, 3.0})
    for (double r : {0.0, 0.5, 2.0})
      CHECK(rel_diff(heat_descent(2, t, r).value, heat_descent_even({2, t, r}, EvenVariant::inside).value) < 1e-9);
}

TEST_CASE("closed-form Poisson kernel") {
  CHECK(rel_diff(poisson_closed({1, pi / 2, 0.0}), 1 / (2 * pi)) < 1e-15);
  CHECK(poisson_closed({1, 1e-12, 1.0}) < 1e-12);
  CHECK(rel_diff(poisson_closed({3, 1, 1}), std::sin(1.0) / std::pow(2 * pi, 2) / std::pow(std::cosh(1.0) - std::cos(1.0), 2)) < 1e-14);
  CHECK_THROWS_AS(poisson_closed({1, 3.5, 1.0}), ck::DomainError);
  CHECK_THROWS_AS(poisson_closed({1, 0.0, 1.0}), ck::DomainError);
}

TEST_CASE("Poisson descent and raising") {
  CHECK(rel_diff(poisson_descent(1, 1, 0.5).value, poisson_closed({1, 1, 0.5})) < 1e-8);
  CHECK(rel_diff(poisson_raise({3, 1, 1}).value, poisson_closed({3, 1, 1})) < 1e-13);
  CHECK(rel_diff(poisson_raise({1, 1, 1}).value, poisson_closed({1, 1, 1})) < 1e-15);
  for (int n = 1; n <= 5; ++n)
    for (double y : {0.3, 1.5, 3.0})
      for (double r : {0.0, 0.6, 3.0}) {
        const double ref = poisson_closed({n, y, r});
        CHECK(rel_diff(poisson_descent(n, y, r).value, ref) < 1e-9);
        CHECK(rel_diff(poisson_raise({n, y, r}).value, ref) < 1e-9);
      }
}

TEST_CASE("one-dimensional Poisson mass is that of a strip") {
  for (double y : {0.5, 1.0, 2.0}) {
    const auto m = ck::integrate_to_infinity([y](double r) { return 2 * poisson_closed({1, y, r}); }, 0, 1);
    CHECK(std::abs(m.value - (1 - y / pi)) < 1e-10);
  }
}

TEST_CASE("heat mass grows like e^t in dimension three") {
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    auto f = [t](double r) {
      const double q = -r * r / (4 * t);
      return 2 * pi * std::pow(4 * pi * t, -1.5) * r * (std::exp(q + r) - std::exp(q - r));
    };
    const double m = ck::integrate_to_infinity(f, 0, 1 + t, 1e-12).value;
    CHECK(std::abs(m - std::exp(t)) < 1e-8);
  }
}

TEST_CASE("hyperbolic Bromwich contour") {
  CHECK(rel_diff(heat_gruet(3, 1, 1, ck::ContourSpec::gaussian(pi, 1, 1)).value, heat_raise_odd({3, 1, 1}).value) < 1e-9);
  CHECK(rel_diff(heat_gruet(2, 0.5, 1, ck::ContourSpec::gaussian(pi, 0.5, 1)).value, heat_descent_even({2, 0.5, 1}).value) < 1e-8);
  const auto a = heat_gruet(3, 1, 1, ck::ContourSpec::gaussian(2.5, 1, 1));
  const auto b = heat_gruet(3, 1, 1, ck::ContourSpec::gaussian(pi, 1, 1));
  CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate);
  CHECK_THROWS_AS(heat_gruet(3, 1, 1, ck::ContourSpec::gaussian(7.0, 1, 1)), ck::ContourError);
  for (int n = 1; n <= 5; ++n)
    for (double t : {0.1, 1.0, 4.0})
      for (double r : {0.2, 2.0, 4.0})
        CHECK(rel_diff(heat_gruet(n, t, r).value, heat_kernel(n, t, r).value) < 1e-8);
}

TEST_CASE("real-variable form at sigma = pi") {
  CHECK(rel_diff(heat_gruet_classic(3, 1, 1).value, heat_raise_odd({3, 1, 1}).value) < 1e-8);
  CHECK(rel_diff(heat_gruet_classic(2, 1, 0.5).value, heat_descent_even({2, 1, 0.5}).value) < 1e-7);
  for (int n = 1; n <= 5; ++n)
    for (double t : {0.1, 1.0, 4.0})
      for (double r : {0.2, 2.0, 4.0}) {
        CAPTURE(n); CAPTURE(t); CAPTURE(r);
        const double c = heat_gruet_classic(n, t, r).value;
        CHECK(rel_diff(c, heat_kernel(n, t, r).value) < 1e-8);
        CHECK(rel_diff(c, heat_gruet(n, t, r).value) < 1e-8);
      }
}

TEST_CASE("even dimensions at extreme times") {
  // small t: the Euclidean limit, to first order in t
  const double t = 1e-6;
  CHECK(rel_diff(heat_descent_even({4, t, 0}).value, std::pow(4 * pi * t, -2)) < 1e-5);
  CHECK(rel_diff(heat_descent_even({4, t, 1e-3}).value, std::pow(4 * pi * t, -2) * std::exp(-0.25)) < 1e-5);
  for (double tt : {1e3, 1e5})
    for (double r : {0.0, 3.0}) {
      const auto v = heat_descent_even({4, tt, r});
      REQUIRE(std::isfinite(v.value));
      CHECK(rel_diff(v.value, heat_gruet(4, tt, r).value) < 1e-9);
    }
}
