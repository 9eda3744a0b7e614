#pragma once

#include <functional>

#include "ck/geometry.hpp"
#include "ck/jet.hpp"

namespace ck {

/// Supplies the Taylor jet of a fixed radial function at (center, order).
/// Jets of different orders at one center must agree on shared coefficients.
struct RadialGenerator {
  std::function<Jet(double center, int order)> jet;
  /// Whether `jet` is valid when centred on a zero of the weight: r = 0, and
  /// r = π on the sphere. Quadrature-backed generators whose integrand is
  /// not uniformly smooth there clear the flag.
  bool analytic_at_origin = true;
  bool analytic_at_antipode = true;
  /// Length over which the function varies; non-analytic generators are
  /// extrapolated from nodes spaced in proportion to it.
  double scale = 1.0;

  bool analytic_at(double pole) const {
    return pole == 0.0 ? analytic_at_origin : analytic_at_antipode;
  }
};

/// Within this distance of a pole the interior chain is never used.
inline constexpr double kPoleRadius = 1e-3;
/// Within this distance of a pole, analytic generators are evaluated through
/// a pole-centred series when it converges. The interior chain divides by w
/// k times and loses roughly (scale/r)^{2k} in relative accuracy there.
inline constexpr double kSeriesRadius = 1.0;
/// Spacing of the extrapolation nodes used for non-analytic generators of
/// unit scale; both this and kPoleRadius shrink with a smaller scale.
inline constexpr double kPoleNodeSpacing = 1e-2;
inline constexpr int kMaxJetOrder = 128;

/// (D^k g)(r) with D = −(2π w)⁻¹ d/dr. Requests a jet of order k from g and
/// spends one order per application. Throws SingularPointError at a zero of w.
double raise_operator(Space space, const RadialGenerator& g, int k, double r);

/// Jet of D^k g at an interior r, of order `extra_order`.
Jet raise_jet(Space space, const RadialGenerator& g, int k, double r, int extra_order);

/// D^k g at any r in the domain. Near a pole, analytic generators use a
/// pole-centred jet (the zero of g′ cancels the zero of w exactly) summed at
/// the offset; other generators are extrapolated as even functions of the
/// offset from the pole.
double raise_radial(Space space, const RadialGenerator& g, int k, double r);

/// Distance from r to the nearest zero of w, and that zero.
double pole_distance(Space space, double r, double* pole = nullptr);

}  // namespace ck
