#include "ck/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ck/errors.hpp"

namespace ck {

double Space::max_distance() const {
  return curvature_ == Curvature::positive ? pi
                                           : std::numeric_limits<double>::infinity();
}

bool Space::contains(double r) const {
  return std::isfinite(r) && r >= 0.0 && r <= max_distance();
}

bool Space::is_pole(double r) const {
  return r == 0.0 || (curvature_ == Curvature::positive && r == pi);
}

std::string_view Space::name() const {
  switch (curvature_) {
    case Curvature::flat: return "euclidean";
    case Curvature::positive: return "sphere";
    case Curvature::negative: return "hyperbolic";
  }
  return "unknown";
}

Space Space::parse(std::string_view name) {
  if (name == "euclidean") return euclidean();
  if (name == "sphere") return sphere();
  if (name == "hyperbolic") return hyperbolic();
  throw DomainError("unknown space '" + std::string(name) + "'");
}

std::string_view to_string(KernelKind kind) {
  return kind == KernelKind::heat ? "heat" : "poisson";
}

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "heat") return KernelKind::heat;
  if (name == "poisson") return KernelKind::poisson;
  throw DomainError("unknown kernel kind '" + std::string(name) + "'");
}

std::string_view to_string(Convention c) {
  return c == Convention::paper ? "paper" : "markovian";
}

Convention parse_convention(std::string_view name) {
  if (name == "paper") return Convention::paper;
  if (name == "markovian") return Convention::markovian;
  throw DomainError("unknown convention '" + std::string(name) + "'");
}

double spectral_shift(Space space, int n) {
  const double q = (n - 1) * (n - 1) / 4.0;
  switch (space.curvature()) {
    case Curvature::flat: return 0.0;
    case Curvature::positive: return -q;
    case Curvature::negative: return q;
  }
  return 0.0;
}

double convention_factor(Space space, int n, double t, Convention c) {
  if (c == Convention::paper) return 1.0;
  return std::exp(-spectral_shift(space, n) * t);
}

void KernelQuery::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(param > 0.0) || !std::isfinite(param))
    throw DomainError(kind == KernelKind::heat ? "t must be positive"
                                               : "y must be positive");
  if (!space.contains(r))
    throw DomainError("distance outside the domain of " + std::string(space.name()));
  if (kind == KernelKind::poisson && space == Space::hyperbolic() && !(param < pi))
    throw DomainError("hyperbolic Poisson height must lie in (0, pi)");
}

double weight(Space space, double r) {
  if (!space.contains(r)) throw DomainError("distance outside the domain");
  switch (space.curvature()) {
    case Curvature::flat: return r;
    case Curvature::positive: return std::sin(r);
    case Curvature::negative: return std::sinh(r);
  }
  return 0.0;
}

double weight_derivative(Space space, double r) {
  switch (space.curvature()) {
    case Curvature::flat: return 1.0;
    case Curvature::positive: return std::cos(r);
    case Curvature::negative: return std::cosh(r);
  }
  return 0.0;
}

Jet weight_jet(Space space, double center, int order) {
  const Jet x = Jet::variable(center, order);
  switch (space.curvature()) {
    case Curvature::flat: return x;
    case Curvature::negative: return sinh(x);
    case Curvature::positive:
      // sin r = sin(π − r); keeps the constant term exactly 0 at r = π.
      if (center > pi / 2) return sin(pi - x);
      return sin(x);
  }
  return x;
}

double sphere_surface_coeff(int n) {
  if (n < 1) throw DomainError("sphere_surface_coeff needs n >= 1");
  return 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
}

double radial_laplacian(Space space, int n, const Jet& u) {
  if (u.order() < 2) throw DomainError("radial_laplacian needs a jet of order >= 2");
  const double r = u.center();
  if (!space.contains(r)) throw DomainError("distance outside the domain");
  const double second = 2.0 * u[2];
  if (n == 1) return second;
  if (space.is_pole(r))
    throw SingularPointError("radial Laplacian is singular where the weight vanishes");
  const double first = u[1];
  return second + (n - 1) * weight_derivative(space, r) / weight(space, r) * first;
}

}  // namespace ck
