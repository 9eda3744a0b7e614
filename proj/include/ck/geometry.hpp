#pragma once

#include <numbers>
#include <string>
#include <string_view>

#include "ck/jet.hpp"

namespace ck {

enum class Curvature { flat, positive, negative };

/// One of the three unit-curvature model spaces. Only geodesic distances are
/// modelled; all kernels here are radial.
class Space {
 public:
  constexpr explicit Space(Curvature c) : curvature_(c) {}

  static constexpr Space euclidean() { return Space(Curvature::flat); }
  static constexpr Space sphere() { return Space(Curvature::positive); }
  static constexpr Space hyperbolic() { return Space(Curvature::negative); }

  constexpr Curvature curvature() const { return curvature_; }
  /// Upper end of the distance domain (π on the sphere, +∞ otherwise).
  double max_distance() const;
  bool contains(double r) const;
  /// Distances where the radial weight vanishes: 0, and π on the sphere.
  bool is_pole(double r) const;

  std::string_view name() const;
  static Space parse(std::string_view name);

  friend constexpr bool operator==(Space, Space) = default;

 private:
  Curvature curvature_;
};

enum class KernelKind { heat, poisson };

std::string_view to_string(KernelKind kind);
KernelKind parse_kernel_kind(std::string_view name);

/// Which operator the heat kernels are normalised for. `paper` kernels solve
/// ∂_t u = (Δ + λ_n) u with λ_n from `spectral_shift`; `markovian` kernels
/// solve ∂_t u = Δu and have unit mass.
enum class Convention { paper, markovian };

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view name);

/// λ_n: 0 on ℝⁿ, −(n−1)²/4 on 𝕊ⁿ, +(n−1)²/4 on ℍⁿ.
double spectral_shift(Space space, int n);
/// Factor turning a `paper`-convention heat kernel at time t into `c`.
double convention_factor(Space space, int n, double t, Convention c);

struct KernelQuery {
  Space space = Space::euclidean();
  int n = 1;
  KernelKind kind = KernelKind::heat;
  /// t for heat, y for Poisson.
  double param = 1.0;
  double r = 0.0;

  /// Throws DomainError when the query violates its invariants.
  void validate() const;
};

/// w(r): r, sin r or sinh r.
double weight(Space space, double r);
/// w'(r): 1, cos r or cosh r.
double weight_derivative(Space space, double r);
/// Jet of w about `center`. At the poles the constant term is exactly zero.
Jet weight_jet(Space space, double center, int order);

/// Measure of the unit (n−1)-sphere, 2π^{n/2}/Γ(n/2).
double sphere_surface_coeff(int n);

/// u″ + (n−1)(w′/w)u′ at the jet's center. Throws SingularPointError at a
/// zero of w unless n = 1.
double radial_laplacian(Space space, int n, const Jet& u);

inline constexpr double pi = std::numbers::pi;

}  // namespace ck
