#include <cmath>

#include "ck/errors.hpp"
#include "ck/geometry.hpp"
#include "doctest.h"

using ck::Jet;
using ck::Space;

TEST_CASE("weight examples") {
  CHECK(ck::weight(Space::euclidean(), 2.0) == 2.0);
  CHECK(ck::weight(Space::sphere(), ck::pi / 2) == doctest::Approx(1.0));
  CHECK(ck::weight(Space::hyperbolic(), 0.0) == 0.0);
  CHECK_THROWS_AS(ck::weight(Space::sphere(), 4.0), ck::DomainError);
  CHECK_THROWS_AS(ck::weight(Space::euclidean(), -1.0), ck::DomainError);
}

TEST_CASE("weight near the origin") {
  for (Space s : {Space::euclidean(), Space::sphere(), Space::hyperbolic()}) {
    CHECK(ck::weight(s, 0.0) == 0.0);
    CHECK(ck::weight_derivative(s, 0.0) == 1.0);
    CHECK(std::abs(ck::weight(s, 1e-6) / 1e-6 - 1.0) < 1e-6);
    for (double r : {0.1, 1.0, 2.0, 3.1}) CHECK(ck::weight(s, r) > 0.0);
  }
}

TEST_CASE("sphere surface coefficients") {
  CHECK(ck::sphere_surface_coeff(1) == doctest::Approx(2.0));
  CHECK(ck::sphere_surface_coeff(2) == doctest::Approx(2 * ck::pi));
  CHECK(ck::sphere_surface_coeff(3) == doctest::Approx(4 * ck::pi));
  CHECK_THROWS_AS(ck::sphere_surface_coeff(0), ck::DomainError);
}

TEST_CASE("radial Laplacian examples") {
  const Jet r = Jet::variable(1.0, 2);
  CHECK(ck::radial_laplacian(Space::euclidean(), 3, r * r) == doctest::Approx(6.0));
  CHECK(ck::radial_laplacian(Space::euclidean(), 1, ck::exp(Jet::variable(0.0, 2))) ==
        doctest::Approx(1.0));
  CHECK(ck::radial_laplacian(Space::hyperbolic(), 2, ck::cosh(r)) ==
        doctest::Approx(2 * std::cosh(1.0)));
  CHECK_THROWS_AS(ck::radial_laplacian(Space::euclidean(), 3, Jet::variable(0.0, 2)),
                  ck::SingularPointError);
  CHECK_THROWS_AS(ck::radial_laplacian(Space::sphere(), 3, Jet::variable(ck::pi, 2)),
                  ck::SingularPointError);
  CHECK_THROWS_AS(ck::radial_laplacian(Space::sphere(), 3, Jet::variable(1.0, 1)),
                  ck::DomainError);
}

TEST_CASE("radial Laplacian of a constant vanishes") {
  for (Space s : {Space::euclidean(), Space::sphere(), Space::hyperbolic()})
    CHECK(ck::radial_laplacian(s, 4, Jet::constant(3.0, 1.3, 2)) == 0.0);
}

TEST_CASE("radial Laplacian matches a finite-difference stencil") {
  const double h = 1e-4;
  auto f = [](double x) { return std::exp(-x * x / 3) * std::cos(x); };
  for (Space s : {Space::euclidean(), Space::sphere(), Space::hyperbolic()}) {
    for (double r : {0.4, 1.1, 2.5}) {
      const Jet x = Jet::variable(r, 2);
      const Jet u = ck::exp(-x * x / 3.0) * ck::cos(x);
      const double d1 = (f(r + h) - f(r - h)) / (2 * h);
      const double d2 = (f(r + h) - 2 * f(r) + f(r - h)) / (h * h);
      const double fd = d2 + 2 * ck::weight_derivative(s, r) / ck::weight(s, r) * d1;
      CHECK(std::abs(ck::radial_laplacian(s, 3, u) - fd) < 1e-6);
    }
  }
}

TEST_CASE("weight jets vanish exactly at the poles") {
  CHECK(ck::weight_jet(Space::sphere(), ck::pi, 4)[0] == 0.0);
  CHECK(ck::weight_jet(Space::sphere(), ck::pi, 4)[1] == doctest::Approx(-1.0));
  CHECK(ck::weight_jet(Space::hyperbolic(), 0.0, 4)[0] == 0.0);
}

TEST_CASE("query validation") {
  ck::KernelQuery q;
  q.space = Space::hyperbolic();
  q.kind = ck::KernelKind::poisson;
  q.param = 4.0;
  CHECK_THROWS_AS(q.validate(), ck::DomainError);
  q.param = 1.0;
  CHECK_NOTHROW(q.validate());
  q.kind = ck::KernelKind::heat;
  q.param = -1.0;
  CHECK_THROWS_AS(q.validate(), ck::DomainError);
  q.param = 1.0;
  q.n = 0;
  CHECK_THROWS_AS(q.validate(), ck::DomainError);
}

TEST_CASE("names parse back") {
  for (Space s : {Space::euclidean(), Space::sphere(), Space::hyperbolic()})
    CHECK(Space::parse(s.name()) == s);
  CHECK_THROWS_AS(Space::parse("torus"), ck::DomainError);
  CHECK(ck::parse_convention("markovian") == ck::Convention::markovian);
}

TEST_CASE("convention factors") {
  CHECK(ck::spectral_shift(Space::hyperbolic(), 3) == 1.0);
  CHECK(ck::spectral_shift(Space::sphere(), 3) == -1.0);
  CHECK(ck::convention_factor(Space::hyperbolic(), 3, 2.0, ck::Convention::markovian) ==
        doctest::Approx(std::exp(-2.0)));
  CHECK(ck::convention_factor(Space::hyperbolic(), 3, 2.0, ck::Convention::paper) == 1.0);
}
