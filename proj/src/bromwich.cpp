#include "ck/bromwich.hpp"

#include <cmath>

#include "ck/errors.hpp"
#include "ck/geometry.hpp"

namespace ck {

QuadResult bromwich_heat(const std::function<MpComplex(const MpComplex&)>& poisson_shape,
                         double scale, double t, const ContourSpec& spec) {
  if (!(t > 0.0)) throw DomainError("t must be positive");
  const Mp inv4t = Mp(1) / (Mp(4) * Mp(t));
  auto f = [&](const MpComplex& y) { return exp(y * y * inv4t) * poisson_shape(y); };
  const double c = scale / std::sqrt(pi * t);
  try {
    QuadResult r = integrate_contour<Mp>(f, spec);
    r.value *= c;
    r.err_estimate *= std::abs(c);
    return r;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what(), c * e.best_estimate(), std::abs(c) * e.err_estimate());
  }
}

}  // namespace ck
