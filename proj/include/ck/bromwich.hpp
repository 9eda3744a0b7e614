#pragma once

#include <functional>

#include "ck/multiprecision.hpp"
#include "ck/quadrature.hpp"

namespace ck {

using MpComplex = Complex<Mp>;

/// Heat kernel recovered from the Laplace transform in y² of its Poisson
/// kernel: H(t) = (πt)^{−1/2} ∫₀^∞ Re[e^{y²/4t} P(y)] dξ on y = σ − iξ.
/// `poisson_shape` is P without its constant prefactor `scale`.
QuadResult bromwich_heat(const std::function<MpComplex(const MpComplex&)>& poisson_shape,
                         double scale, double t, const ContourSpec& spec);

}  // namespace ck
