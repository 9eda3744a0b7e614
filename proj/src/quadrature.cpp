#include "ck/quadrature.hpp"

#include <cmath>

namespace ck {

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol, const QuadLimits& limits) {
  return adaptive_gauss_kronrod<double, double>(f, std::vector<double>{a, b}, tol, limits);
}

QuadResult integrate_sqrt_endpoint(const std::function<double(double)>& f_regular, double a,
                                   double b, double tol, const QuadLimits& limits) {
  if (!(a < b)) throw DomainError("quadrature limits must increase");
  // dx (x−a)^{−1/2} = 2 du
  auto g = [&](double u) { return 2.0 * f_regular(a + u * u); };
  return integrate_adaptive(g, 0.0, std::sqrt(b - a), tol, limits);
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double scale,
                                 double tol, const QuadLimits& limits) {
  if (!(scale > 0.0)) throw DomainError("scale must be positive");
  auto g = [&](double u) {
    const double v = 1.0 - u;
    const double x = a + scale * u / v;
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : fx * scale / (v * v);
  };
  return integrate_adaptive(g, 0.0, 1.0, tol, limits);
}

ContourSpec ContourSpec::gaussian(double sigma, double t, double r, double tol) {
  if (!(t > 0.0)) throw DomainError("time must be positive");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  ContourSpec s;
  s.sigma = sigma;
  s.tol = tol;
  s.envelope_t = t;
  s.xi_max = std::sqrt(sigma * sigma + r * r + 4.0 * t * (std::log(1.0 / tol) + 30.0));
  return s;
}

}  // namespace ck
