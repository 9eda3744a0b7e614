#pragma once

#include "ck/jet.hpp"
#include "ck/quadrature.hpp"
#include "ck/raise.hpp"

namespace ck::hyperbolic {

struct HeatParams {
  int n = 1;
  double t = 1.0;
  double rho = 0.0;
  void validate() const;
};

/// Heights are restricted to (0, π): the sin y numerator changes sign
/// outside.
struct PoissonParams {
  int n = 1;
  double y = 1.0;
  double rho = 0.0;
  void validate() const;
};

enum class EvenVariant { outside, inside };

/// Odd n: D^{(n−1)/2} of the flat 1-D Gaussian with w = sinh.
QuadResult heat_raise_odd(const HeatParams& p);

/// Even n. `outside`: D^{(n−2)/2} applied to the descent of H₃.
/// `inside`: the descent of D^{(n−2)/2} H₃ = H_{n+1}.
QuadResult heat_descent_even(const HeatParams& p, EvenVariant variant = EvenVariant::outside,
                             double tol = kDefaultTol);

/// ∫_ρ^∞ (cosh²(s/2) − cosh²(ρ/2))^{−1/2} H_{n+1}(t,s) sinh s ds for any n,
/// with H_{n+1} from heat_kernel.
QuadResult heat_descent(int n, double t, double rho, double tol = kDefaultTol);

/// Reference evaluation: heat_raise_odd or heat_descent_even (outside).
QuadResult heat_kernel(int n, double t, double rho, double tol = kDefaultTol);

/// Γ((n+1)/2)/(2π)^{(n+1)/2} · sin y/(cosh ρ − cos y)^{(n+1)/2}
double poisson_closed(const PoissonParams& p);
Jet poisson_closed_jet(int n, double y, double center, int order);

/// ∫_ρ^∞ (cosh²(s/2) − cosh²(ρ/2))^{−1/2} P_{n+1}(y,s) sinh s ds.
QuadResult poisson_descent(int n, double y, double rho, double tol = kDefaultTol);
/// D^{(n−1)/2} P₁ (odd n) or D^{(n−2)/2} P₂ (even n).
QuadResult poisson_raise(const PoissonParams& p);

inline constexpr double kDefaultSigma = 3.141592653589793;

/// Bromwich inversion along Re y = σ ∈ (0, 2π).
QuadResult heat_gruet(int n, double t, double rho, const ContourSpec& spec);
QuadResult heat_gruet(int n, double t, double rho, double tol = kDefaultTol);

/// The real-variable form obtained at σ = π:
/// K_n τ^{−1/2} ∫₀^∞ e^{(π²−ξ²)/2τ} sinh ξ sin(πξ/τ)/(cosh ρ + cosh ξ)^{(n+1)/2} dξ
/// with K_n = Γ((n+1)/2)/(2^{n/2}π^{n/2+1}), evaluated at τ = 2t.
QuadResult heat_gruet_classic(int n, double t, double rho, double tol = kDefaultTol);

}  // namespace ck::hyperbolic
