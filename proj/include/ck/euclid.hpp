#pragma once

#include "ck/jet.hpp"
#include "ck/quadrature.hpp"
#include "ck/raise.hpp"

namespace ck::euclid {

struct HeatParams {
  int n = 1;
  double t = 1.0;
  double r = 0.0;
  void validate() const;
};

struct PoissonParams {
  int n = 1;
  double y = 1.0;
  double r = 0.0;
  void validate() const;
};

/// How even dimensions are reached from the descended 2-D kernel: apply the
/// raising operator to the descent integral, or raise the integrand first.
enum class EvenVariant { outside, inside };

/// (4πt)^{−n/2} e^{−r²/4t}
double heat_closed(const HeatParams& p);
/// Γ((n+1)/2)/π^{(n+1)/2} · y/(r²+y²)^{(n+1)/2}
double poisson_closed(const PoissonParams& p);

/// Jet of the closed-form heat kernel in r (works at r = 0).
Jet heat_closed_jet(int n, double t, double center, int order);
Jet poisson_closed_jet(int n, double y, double center, int order);

/// The 1-D Gaussian e^{−r²/4t}/(4πt)^{1/2}, the base of every odd raise.
RadialGenerator gaussian_generator(double t);

/// (y/π^{(n+1)/2}) ∫₀^∞ e^{−(r²+y²)u} u^{(n−1)/2} du.
QuadResult poisson_integral(const PoissonParams& p, double tol = kDefaultTol);

/// Odd n: D^{(n−1)/2} applied to the 1-D Gaussian. Even n: D^{(n−2)/2}
/// applied to the descent of the 3-D kernel (`outside`), or the descent of
/// D^{(n−2)/2} of the 3-D kernel (`inside`).
QuadResult heat_raise(const HeatParams& p, EvenVariant variant = EvenVariant::outside,
                      double tol = kDefaultTol);

/// ∫_r^∞ (s²−r²)^{−1/2} H_{n+1}(t,s) 2s ds with the closed form H_{n+1}.
QuadResult heat_descent(int n, double t, double r, double tol = kDefaultTol);

/// Abscissa used when the caller does not choose one.
double default_sigma(double r);

/// Bromwich inversion of the Poisson kernel along Re y = σ > 0.
QuadResult heat_gruet(int n, double t, double r, const ContourSpec& spec);
QuadResult heat_gruet(int n, double t, double r, double tol = kDefaultTol);

/// Poisson analogues of heat_raise and heat_descent, with bases P₁ and the
/// descent of P₃.
QuadResult poisson_raise(const PoissonParams& p, EvenVariant variant = EvenVariant::outside,
                         double tol = kDefaultTol);
QuadResult poisson_descent(int n, double y, double r, double tol = kDefaultTol);

}  // namespace ck::euclid
