#include "ck/sphere.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "ck/bromwich.hpp"
#include "ck/errors.hpp"
#include "ck/geometry.hpp"

namespace ck::sphere {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTailMargin = 40.0;
const double kSqrt2 = std::sqrt(2.0);

double poisson_const(int n) {
  const double p = (n + 1) / 2.0;
  return std::tgamma(p) / std::pow(pi, p);
}

// Images m with |x + 2πm| inside the Gaussian window, for every x in [lo, hi].
std::pair<int, int> image_range(double t, double lo, double hi, double tol) {
  const double reach = std::sqrt(4.0 * t * (std::log(1.0 / tol) + kTailMargin)) + 2.0 * pi;
  return {static_cast<int>(std::floor((-hi - reach) / (2.0 * pi))),
          static_cast<int>(std::ceil((reach - lo) / (2.0 * pi)))};
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive");
}

// Σ_m (−1)^m (ψ+2πm) e^{−(ψ+2πm)²/4t}, odd in ψ.
template <class T>
T alternating_images(double t, const T& psi, std::pair<int, int> range) {
  T sum = psi * 0.0;
  for (int m = range.first; m <= range.second; ++m) {
    const T a = psi + 2.0 * pi * m;
    const T term = a * exp(a * a * (-1.0 / (4.0 * t)));
    if (m % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

double exp_d(double x) { return std::exp(x); }
double alternating_images(double t, double psi, std::pair<int, int> range) {
  double sum = 0.0;
  for (int m = range.first; m <= range.second; ++m) {
    const double a = psi + 2.0 * pi * m;
    const double term = a * exp_d(-a * a / (4.0 * t));
    sum += (m % 2 == 0) ? term : -term;
  }
  return sum;
}

// sin(cL)/(cL) for a jet L of order K+1, returned at order K. Handles L
// vanishing at the center (the antipode).
Jet sin_ratio(const Jet& L, double c) {
  const int k = L.order() - 1;
  if (c == 0.0) return Jet::constant(1.0, L.center(), k);
  const Jet cl = L * c;
  if (L[0] == 0.0) return divide_removable(sin(cl), cl);
  return (sin(cl) / cl).truncated(k);
}

// Beyond this time the Fourier series Σ e^{−k²t} cos kφ needs fewer terms
// than the image sum.
constexpr double kFourierTime = 1.0;

int fourier_terms(double t, double tol) {
  return static_cast<int>(std::ceil(std::sqrt((std::log(1.0 / tol) + kTailMargin) / t))) + 1;
}

// Σ_l (2l+1)/4π · P_l(c) · e^{−(l+½)²t}, the spectral form on 𝕊² (shifted
// spectrum), with P_l from the three-term recurrence.
template <class T>
T legendre_series(double t, const T& c, int terms, double log_scale) {
  T prev = c * 0.0 + 1.0;
  T cur = c;
  T sum = prev * std::exp(log_scale - 0.25 * t);
  for (int l = 1; l <= terms; ++l) {
    sum += cur * ((2.0 * l + 1.0) * std::exp(log_scale - (l + 0.5) * (l + 0.5) * t));
    T next = (c * cur * (2.0 * l + 1.0) - prev * double(l)) / double(l + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum / (4.0 * pi);
}

}  // namespace

void HeatParams::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  check_time(t);
  if (!Space::sphere().contains(phi)) throw DomainError("phi must lie in [0, pi]");
}

void PoissonParams::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("y must be positive");
  if (!Space::sphere().contains(phi)) throw DomainError("phi must lie in [0, pi]");
}

double heat_theta_1(double t, double phi, double tol, double log_scale) {
  check_time(t);
  check_tol(tol);
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  if (t > kFourierTime) {
    double sum = 0.5 * std::exp(log_scale);
    for (int k = fourier_terms(t, tol); k >= 1; --k) sum += std::exp(log_scale - k * k * t) * std::cos(k * phi);
    return sum / pi;
  }
  const auto [lo, hi] = image_range(t, phi, phi, tol);
  double sum = 0.0;
  for (int m = lo; m <= hi; ++m) {
    const double a = phi + 2.0 * pi * m;
    sum += std::exp(log_scale - a * a / (4.0 * t));
  }
  return sum / std::sqrt(4.0 * pi * t);
}

Jet heat_theta_1_jet(double t, double center, int order, double tol, double log_scale) {
  check_time(t);
  check_tol(tol);
  const Jet x = Jet::variable(center, order);
  if (t > kFourierTime) {
    Jet sum = Jet::constant(0.5 * std::exp(log_scale), center, order);
    for (int k = fourier_terms(t, tol); k >= 1; --k) sum += cos(x * double(k)) * std::exp(log_scale - k * k * t);
    return sum / pi;
  }
  const auto [lo, hi] = image_range(t, center, center, tol);
  Jet sum = Jet::constant(0.0, center, order);
  for (int m = lo; m <= hi; ++m) {
    const Jet a = x + 2.0 * pi * m;
    sum += exp(a * a * (-1.0 / (4.0 * t)) + log_scale);
  }
  return sum / std::sqrt(4.0 * pi * t);
}

// With L = π − φ, ψ = φ + L u² and z = L u²/2, the kernel
// (sin²(ψ/2) − sin²(φ/2))^{−1/2} dψ = (sin z · sin(φ+z))^{−1/2} 2Lu du
// becomes 2√2 · (z/sin z)^{1/2} (L/sin(φ+z))^{1/2} du, regular on [0, 1].
QuadResult heat_theta_2(double t, double phi, double tol, double log_scale) {
  HeatParams{2, t, phi}.validate();
  check_tol(tol);
  if (t > kFourierTime) {
    const double c = std::cos(phi);
    const double v = legendre_series(t, c, fourier_terms(t, tol), log_scale);
    return {v, tol * std::abs(v), 1};
  }
  const auto range = image_range(t, 0.0, pi, tol);
  const double L = pi - phi;
  auto f = [&](double u) {
    const double u2 = u * u;
    const double z = L * u2 / 2.0;
    const double a = z == 0.0 ? 1.0 : z / std::sin(z);
    const double b = L == 0.0 ? 1.0 / (1.0 - u2 / 2.0) : L / std::sin(phi + z);
    return 2.0 * kSqrt2 * std::sqrt(a * b) * alternating_images(t, phi + L * u2, range);
  };
  QuadResult r = integrate_adaptive(f, 0.0, 1.0, tol);
  const double c = std::pow(4.0 * pi * t, -1.5) * std::exp(log_scale);
  r.value *= c;
  r.err_estimate *= c;
  return r;
}

Jet heat_theta_2_jet(double t, double center, int order, double tol, double log_scale) {
  HeatParams{2, t, center}.validate();
  check_tol(tol);
  if (t > kFourierTime)
    return legendre_series(t, cos(Jet::variable(center, order)), fourier_terms(t, tol), log_scale);
  const auto range = image_range(t, 0.0, pi, tol);
  const Jet x = Jet::variable(center, order + 1);
  const Jet L = pi - x;
  const Jet xk = x.truncated(order);
  const Jet Lk = L.truncated(order);
  auto f = [&](double u) {
    const double u2 = u * u;
    const double a = 1.0 - u2 / 2.0;
    // z/sin z = 1/sin_ratio(L, u²/2); L/sin(aL) = 1/(a·sin_ratio(L, a)).
    const Jet inv = sin_ratio(L, u2 / 2.0) * (sin_ratio(L, a) * a);
    return pow(inv, -0.5) * alternating_images(t, xk + Lk * u2, range) * (2.0 * kSqrt2);
  };
  const auto r = adaptive_gauss_kronrod<double, Jet>(f, std::vector<double>{0.0, 1.0}, tol);
  return r.value * (std::pow(4.0 * pi * t, -1.5) * std::exp(log_scale));
}

RadialGenerator theta_1_generator(double t, double tol, double log_scale) {
  return {[t, tol, log_scale](double c, int order) { return heat_theta_1_jet(t, c, order, tol, log_scale); }};
}

RadialGenerator theta_2_generator(double t, double tol, double log_scale) {
  RadialGenerator g{
      [t, tol, log_scale](double c, int order) { return heat_theta_2_jet(t, c, order, tol, log_scale); }};
  // At φ = 0 the ψ-integrand's φ-derivatives are not integrable in u.
  g.analytic_at_origin = false;
  g.scale = std::sqrt(t);
  return g;
}

QuadResult heat_raise(const HeatParams& p, double tol, double log_scale) {
  p.validate();
  check_tol(tol);
  if (p.n % 2 == 1) {
    const int k = (p.n - 1) / 2;
    const double v = raise_radial(Space::sphere(), theta_1_generator(p.t, tol, log_scale), k, p.phi);
    return {v, 4.0 * kEps * (k + 1) * std::abs(v), 1};
  }
  if (p.n == 2) return heat_theta_2(p.t, p.phi, tol, log_scale);
  const int k = (p.n - 2) / 2;
  const double v = raise_radial(Space::sphere(), theta_2_generator(p.t, tol, log_scale), k, p.phi);
  return {v, tol * std::abs(v), 0};
}

double poisson_closed(const PoissonParams& p) {
  p.validate();
  const double sy = std::sinh(p.y / 2.0), sp = std::sin(p.phi / 2.0);
  // 2cosh y − 2cos φ without cancellation.
  const double d = 4.0 * (sy * sy + sp * sp);
  return poisson_const(p.n) * std::sinh(p.y) * std::pow(d, -(p.n + 1) / 2.0);
}

Jet poisson_closed_jet(int n, double y, double center, int order) {
  PoissonParams{n, y, center}.validate();
  const Jet x = Jet::variable(center, order);
  const double sy = std::sinh(y / 2.0);
  const Jet sp = sin(x * 0.5);
  const Jet d = (sp * sp + sy * sy) * 4.0;
  return pow(d, -(n + 1) / 2.0) * (poisson_const(n) * std::sinh(y));
}

QuadResult poisson_doubling(int n, double y, double phi, DoublingVariant variant, double tol) {
  PoissonParams{n, y, phi}.validate();
  check_tol(tol);
  const double cn = std::pow(pi, (n + 1) / 2.0) / (std::pow(2.0, n - 1) * std::tgamma((n + 1) / 2.0));
  const double half_y = y / 2.0;
  const double s4 = std::sinh(y / 4.0);
  const double base = 4.0 * s4 * s4;  // 2cosh(y/2) − 2
  // P_{2n+1}(y/2, ·) as a function of 2cosh(y/2) − 2cos(angle).
  const double pc = std::tgamma(n + 1.0) / std::pow(pi, n + 1.0) * std::sinh(half_y);
  auto p_high = [&](double denom) { return pc * std::pow(denom, -(n + 1.0)); };
  const double c = std::cos(phi / 2.0);

  QuadResult r;
  if (variant == DoublingVariant::cosine) {
    // v = cos α removes the (1 − v²)^{(n−1)/2} endpoint behaviour.
    auto f = [&](double alpha) {
      const double v = std::cos(alpha);
      return p_high(base + 2.0 * (1.0 - v * c)) * std::pow(std::sin(alpha), n);
    };
    r = integrate_adaptive(f, 0.0, pi, tol);
    r.value *= cn * std::cosh(half_y);
    r.err_estimate *= cn * std::cosh(half_y);
    return r;
  }

  if (!(c > 0.0)) throw DomainError("the angle form degenerates at phi = pi; use the cosine form");
  // ψ = φ + u² on [φ, π] and ψ = 2π − φ − u² on [π, 2π − φ]. In both halves
  // sin²(ψ/2) − sin²(φ/2) = sin(u²/2) sin(φ + u²/2) and sin(ψ/2) = sin((φ+u²)/2).
  const double ub = std::sqrt(pi - phi);
  auto half = [&](bool upper) {
    return [&, upper](double u) {
      const double u2 = u * u;
      const double gap = std::sin(u2 / 2.0) * std::sin(phi + u2 / 2.0) / (c * c);
      const double q4 = (phi + u2) / 4.0;
      const double s = upper ? std::cos(q4) : std::sin(q4);
      return std::pow(gap, (n - 1) / 2.0) * p_high(base + 4.0 * s * s) *
             std::sin((phi + u2) / 2.0) * 2.0 * u;
    };
  };
  const QuadResult lo = integrate_adaptive(half(false), 0.0, ub, tol);
  const QuadResult hi = integrate_adaptive(half(true), 0.0, ub, tol);
  const double k = cn / 2.0 * std::cosh(half_y) / c;
  return {k * (lo.value + hi.value), k * (lo.err_estimate + hi.err_estimate), lo.n_evals + hi.n_evals};
}

QuadResult poisson_raise(const PoissonParams& p) {
  p.validate();
  const int base = p.n % 2 == 1 ? 1 : 2;
  const int k = (p.n - base) / 2;
  const double y = p.y;
  const RadialGenerator g{[base, y](double c, int order) { return poisson_closed_jet(base, y, c, order); }};
  const double v = raise_radial(Space::sphere(), g, k, p.phi);
  return {v, 4.0 * kEps * (k + 1) * std::abs(v), 1};
}

QuadResult heat_gruet(int n, double t, double phi, const ContourSpec& spec) {
  HeatParams{n, t, phi}.validate();
  if (!(spec.sigma > 0.0)) throw ContourError("the spherical contour needs sigma > 0");
  // 2cosh y − 2cos φ = e^y (1 − e^{−y+iφ})(1 − e^{−y−iφ}); each factor has
  // positive real part for Re y > 0, so principal powers stay continuous.
  const Mp p = Mp(n + 1) / 2;
  const MpComplex eip(Mp(std::cos(phi)), Mp(std::sin(phi)));
  const MpComplex eim(eip.re, -eip.im);
  const MpComplex one(Mp(1));
  auto shape = [&](const MpComplex& y) {
    const MpComplex e = exp(-y);
    return sinh(y) * exp(-(y * p)) * pow(one - e * eip, -p) * pow(one - e * eim, -p);
  };
  return bromwich_heat(shape, poisson_const(n), t, spec);
}

QuadResult heat_gruet(int n, double t, double phi, double tol) {
  return heat_gruet(n, t, phi, ContourSpec::gaussian(kDefaultSigma, t, phi, tol));
}

}  // namespace ck::sphere
