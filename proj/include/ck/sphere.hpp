#pragma once

#include "ck/jet.hpp"
#include "ck/quadrature.hpp"
#include "ck/raise.hpp"

namespace ck::sphere {

struct HeatParams {
  int n = 1;
  double t = 1.0;
  double phi = 0.0;
  void validate() const;
};

struct PoissonParams {
  int n = 1;
  double y = 1.0;
  double phi = 0.0;
  void validate() const;
};

/// Wrapped Gaussian (4πt)^{−1/2} Σ_m e^{−(φ+2πm)²/4t}. Accepts any real φ
/// (the circle kernel is 2π-periodic and even).
/// Every heat evaluator below takes `log_scale`: the result is multiplied by
/// e^{log_scale} inside the sums, so that convention factors like e^{+t} at
/// large t do not meet an underflowed kernel.
double heat_theta_1(double t, double phi, double tol = kDefaultTol, double log_scale = 0.0);
Jet heat_theta_1_jet(double t, double center, int order, double tol = kDefaultTol, double log_scale = 0.0);

/// The 2-sphere kernel as an Abel-type integral of the alternating wrapped
/// series over ψ ∈ [φ, π]. Defined on the closed interval [0, π].
QuadResult heat_theta_2(double t, double phi, double tol = kDefaultTol, double log_scale = 0.0);
Jet heat_theta_2_jet(double t, double center, int order, double tol = kDefaultTol,
                      double log_scale = 0.0);

RadialGenerator theta_1_generator(double t, double tol = kDefaultTol, double log_scale = 0.0);
RadialGenerator theta_2_generator(double t, double tol = kDefaultTol, double log_scale = 0.0);

/// D^{(n−1)/2} H₁ (odd n) or D^{(n−2)/2} H₂ (even n) with w = sin.
QuadResult heat_raise(const HeatParams& p, double tol = kDefaultTol, double log_scale = 0.0);

/// Γ((n+1)/2)/π^{(n+1)/2} · sinh y/(2cosh y − 2cos φ)^{(n+1)/2}
double poisson_closed(const PoissonParams& p);
Jet poisson_closed_jet(int n, double y, double center, int order);

/// The two integral forms expressing P_n through P_{2n+1} at height y/2:
/// over v = cos(θ)/cos(φ/2) ∈ [−1, 1], or over the angle ψ ∈ [φ, 2π−φ].
enum class DoublingVariant { cosine, angle };

QuadResult poisson_doubling(int n, double y, double phi, DoublingVariant variant,
                            double tol = kDefaultTol);

/// D^{(n−1)/2} P₁ (odd n) or D^{(n−2)/2} P₂ (even n).
QuadResult poisson_raise(const PoissonParams& p);

inline constexpr double kDefaultSigma = 1.0;

/// Bromwich inversion of the Poisson kernel along Re y = σ > 0.
QuadResult heat_gruet(int n, double t, double phi, const ContourSpec& spec);
QuadResult heat_gruet(int n, double t, double phi, double tol = kDefaultTol);

}  // namespace ck::sphere
