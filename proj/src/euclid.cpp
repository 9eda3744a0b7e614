#include "ck/euclid.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "ck/bromwich.hpp"
#include "ck/errors.hpp"
#include "ck/geometry.hpp"

namespace ck::euclid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double half_power(int n) { return (n + 1) / 2.0; }

double poisson_const(int n) {
  const double p = half_power(n);
  return std::tgamma(p) / std::pow(pi, p);
}

// Nats beyond ln(1/tol) kept when truncating a Gaussian tail.
constexpr double kTailMargin = 40.0;

double gaussian_cutoff(double t, double tol) {
  return std::sqrt(4.0 * t * (std::log(1.0 / tol) + kTailMargin));
}

QuadResult point_result(double v, int raises) {
  return {v, 4.0 * kEps * (raises + 1) * std::abs(v), 1};
}

// 2∫₀^∞ F(r² + v²) dv as a jet in r, where F is given as a function of the
// squared distance q. Smooth in r, including r = 0.
struct DescentJet {
  std::function<Jet(const Jet& q)> f_of_q;
  bool gaussian_tail;  // truncate at `extent`; otherwise map [0,∞) with scale `extent`
  double extent;
  double tol;
  std::shared_ptr<double> rel_err = std::make_shared<double>(0.0);

  Jet operator()(double center, int order) const {
    const Jet x = Jet::variable(center, order);
    const Jet x2 = x * x;
    BasicQuadResult<Jet> r{Jet::constant(0.0, center, order)};
    if (gaussian_tail) {
      auto g = [&](double v) { return 2.0 * f_of_q(x2 + v * v); };
      r = adaptive_gauss_kronrod<double, Jet>(g, std::vector<double>{0.0, extent}, tol);
    } else {
      auto g = [&](double u) {
        const double w = 1.0 - u;
        const double v = extent * u / w;
        return f_of_q(x2 + v * v) * (2.0 * extent / (w * w));
      };
      r = adaptive_gauss_kronrod<double, Jet>(g, std::vector<double>{0.0, 1.0}, tol);
    }
    const double m = max_abs_coeff(r.value);
    *rel_err = std::max(*rel_err, m > 0 ? r.err_estimate / m : 0.0);
    return r.value;
  }
};

Jet heat_of_q(int n, double t, const Jet& q) {
  return exp(q * (-1.0 / (4.0 * t))) * std::pow(4.0 * pi * t, -n / 2.0);
}

Jet poisson_of_q(int n, double y, const Jet& q) {
  return pow(q + y * y, -half_power(n)) * (poisson_const(n) * y);
}

}  // namespace

void HeatParams::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("r must be >= 0");
}

void PoissonParams::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("y must be positive");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("r must be >= 0");
}

double heat_closed(const HeatParams& p) {
  p.validate();
  return std::pow(4.0 * pi * p.t, -p.n / 2.0) * std::exp(-p.r * p.r / (4.0 * p.t));
}

double poisson_closed(const PoissonParams& p) {
  p.validate();
  return poisson_const(p.n) * p.y / std::pow(p.r * p.r + p.y * p.y, half_power(p.n));
}

Jet heat_closed_jet(int n, double t, double center, int order) {
  const Jet x = Jet::variable(center, order);
  return heat_of_q(n, t, x * x);
}

Jet poisson_closed_jet(int n, double y, double center, int order) {
  const Jet x = Jet::variable(center, order);
  return poisson_of_q(n, y, x * x);
}

RadialGenerator gaussian_generator(double t) {
  return {[t](double c, int order) { return heat_closed_jet(1, t, c, order); }};
}

QuadResult poisson_integral(const PoissonParams& p, double tol) {
  p.validate();
  const double a = p.r * p.r + p.y * p.y;
  // u = w² turns u^{(n−1)/2} du into 2wⁿ dw.
  auto f = [&](double w) { return 2.0 * std::pow(w, p.n) * std::exp(-a * w * w); };
  QuadResult r = integrate_to_infinity(f, 0.0, 1.0 / std::sqrt(a), tol);
  const double c = p.y / std::pow(pi, half_power(p.n));
  r.value *= c;
  r.err_estimate *= c;
  return r;
}

QuadResult heat_raise(const HeatParams& p, EvenVariant variant, double tol) {
  p.validate();
  if (p.n % 2 == 1) {
    const int k = (p.n - 1) / 2;
    return point_result(raise_radial(Space::euclidean(), gaussian_generator(p.t), k, p.r), k);
  }
  const int k = (p.n - 2) / 2;
  const double t = p.t;
  if (variant == EvenVariant::outside) {
    DescentJet d{[t](const Jet& q) { return heat_of_q(3, t, q); }, true, gaussian_cutoff(t, tol),
                 tol};
    const double v = raise_radial(Space::euclidean(), {d, true}, k, p.r);
    return {v, std::max(*d.rel_err, 4 * kEps) * std::abs(v), 0};
  }
  const RadialGenerator h3{[t](double c, int order) { return heat_closed_jet(3, t, c, order); }};
  const double r = p.r;
  auto f = [&](double q) { return raise_radial(Space::euclidean(), h3, k, std::sqrt(q)); };
  return integrate_sqrt_endpoint(f, r * r, r * r + gaussian_cutoff(t, tol) * gaussian_cutoff(t, tol),
                                 tol);
}

QuadResult heat_descent(int n, double t, double r, double tol) {
  HeatParams{n, t, r}.validate();
  const double c = std::pow(4.0 * pi * t, -(n + 1) / 2.0);
  auto f = [&](double q) { return c * std::exp(-q / (4.0 * t)); };
  const double v = gaussian_cutoff(t, tol);
  return integrate_sqrt_endpoint(f, r * r, r * r + v * v, tol);
}

double default_sigma(double r) { return 0.5 * std::max(1.0, r); }

QuadResult heat_gruet(int n, double t, double r, const ContourSpec& spec) {
  HeatParams{n, t, r}.validate();
  if (!(spec.sigma > 0.0)) throw ContourError("the Euclidean contour needs sigma > 0");
  const Mp r2 = Mp(r) * Mp(r);
  const Mp mp_exp = -Mp(n + 1) / 2;
  auto shape = [&](const MpComplex& y) { return y * pow(y * y + MpComplex(r2), mp_exp); };
  return bromwich_heat(shape, poisson_const(n), t, spec);
}

QuadResult heat_gruet(int n, double t, double r, double tol) {
  return heat_gruet(n, t, r, ContourSpec::gaussian(default_sigma(r), t, r, tol));
}

QuadResult poisson_raise(const PoissonParams& p, EvenVariant variant, double tol) {
  p.validate();
  const double y = p.y;
  if (p.n % 2 == 1) {
    const int k = (p.n - 1) / 2;
    const RadialGenerator p1{[y](double c, int order) { return poisson_closed_jet(1, y, c, order); }};
    return point_result(raise_radial(Space::euclidean(), p1, k, p.r), k);
  }
  const int k = (p.n - 2) / 2;
  if (variant == EvenVariant::outside) {
    DescentJet d{[y](const Jet& q) { return poisson_of_q(3, y, q); }, false, y, tol};
    const double v = raise_radial(Space::euclidean(), {d, true}, k, p.r);
    return {v, std::max(*d.rel_err, 4 * kEps) * std::abs(v), 0};
  }
  const RadialGenerator p3{[y](double c, int order) { return poisson_closed_jet(3, y, c, order); }};
  const double r = p.r;
  auto f = [&](double v) { return 2.0 * raise_radial(Space::euclidean(), p3, k, std::hypot(r, v)); };
  return integrate_to_infinity(f, 0.0, std::hypot(r, y), tol);
}

QuadResult poisson_descent(int n, double y, double r, double tol) {
  PoissonParams{n, y, r}.validate();
  auto f = [&](double v) { return 2.0 * poisson_closed({n + 1, y, std::hypot(r, v)}); };
  return integrate_to_infinity(f, 0.0, std::hypot(r, y), tol);
}

}  // namespace ck::euclid
