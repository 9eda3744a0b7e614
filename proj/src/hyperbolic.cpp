#include "ck/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include <boost/math/constants/constants.hpp>

#include "ck/bromwich.hpp"
#include "ck/errors.hpp"
#include "ck/euclid.hpp"
#include "ck/geometry.hpp"

namespace ck::hyperbolic {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTailMargin = 40.0;

double half_power(int n) { return (n + 1) / 2.0; }

void check_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

double tail_nats(double tol) { return std::log(1.0 / tol) + kTailMargin; }

// Length S of [ρ, ρ+S] beyond which a descent integrand with Gaussian decay
// e^{−s²/4t + s/2} has dropped by e^{−tail_nats}. The descent weight times
// H_{n+1}·sinh s decays at least like s·e^{−s/2}, which caps S for large t.
double gaussian_extent(double t, double rho, double tol) {
  const double c = tail_nats(tol);
  const double gauss = t + std::sqrt((rho - t) * (rho - t) + 4.0 * t * c) - rho + 1.0;
  return std::min(gauss, 2.0 * c + 20.0);
}

// Same for Poisson integrands decaying like e^{−(n+1)s/2}.
double exponential_extent(int n, double tol) { return 2.0 * tail_nats(tol) / (n + 1) + 2.0; }

// Substituting s = ρ + S u² and z = S u²/2 in the descent kernel gives
// (cosh²(s/2) − cosh²(ρ/2))^{−1/2} ds = 2√(2S) (z/sinh z)^{1/2} sinh(ρ+z)^{−1/2} du.
double descent_weight(double rho, double S, double u) {
  const double z = S * u * u / 2.0;
  const double a = z == 0.0 ? 1.0 : z / std::sinh(z);
  return 2.0 * std::sqrt(2.0 * S * a / std::sinh(rho + z));
}

QuadResult descend(const std::function<double(double)>& f, double rho, double S, double tol) {
  auto g = [&](double u) {
    const double s = rho + S * u * u;
    const double w = descent_weight(rho, S, u);
    if (w == 0.0) return 0.0;
    const double fs = f(s);
    return fs == 0.0 ? 0.0 : w * fs * std::sinh(s);  // f underflows before sinh overflows
  };
  return integrate_adaptive(g, 0.0, 1.0, tol);
}

// H₃ᴴ(t,s) = (4πt)^{−3/2} (s/sinh s) e^{−s²/4t} as a jet, for s > 0.
Jet h3_jet(double t, const Jet& s) {
  return s / sinh(s) * exp(s * s * (-1.0 / (4.0 * t))) * std::pow(4.0 * pi * t, -1.5);
}

// The same in the distance variable itself, including the centre ρ = 0.
Jet h3_jet_at(double t, double center, int order) {
  if (center != 0.0) return h3_jet(t, Jet::variable(center, order));
  const Jet x = Jet::variable(0.0, order + 1);
  const Jet xs = x.truncated(order);
  return divide_removable(x, sinh(x)) * exp(xs * xs * (-1.0 / (4.0 * t))) *
         std::pow(4.0 * pi * t, -1.5);
}

// Descent of H₃ as a jet in ρ; only ρ-dependence is through s and sinh(ρ+z).
struct H2Jet {
  double t, tol;
  std::shared_ptr<double> rel_err = std::make_shared<double>(0.0);

  Jet operator()(double center, int order) const {
    const double S = gaussian_extent(t, center, tol);
    const Jet x = Jet::variable(center, order);
    auto g = [&](double u) {
      const double z = S * u * u / 2.0;
      const double a = z == 0.0 ? 1.0 : z / std::sinh(z);
      const Jet s = x + S * u * u;
      const Jet w = pow(sinh(x + z), -0.5) * (2.0 * std::sqrt(2.0 * S * a));
      // H₃·sinh s, without forming s/sinh s
      return w * s * exp(s * s * (-1.0 / (4.0 * t))) * std::pow(4.0 * pi * t, -1.5);
    };
    const auto r = adaptive_gauss_kronrod<double, Jet>(g, std::vector<double>{0.0, 1.0}, tol);
    const double m = max_abs_coeff(r.value);
    *rel_err = std::max(*rel_err, m > 0 ? r.err_estimate / m : 0.0);
    return r.value;
  }
};

RadialGenerator h3_generator(double t) {
  return {[t](double c, int order) { return h3_jet_at(t, c, order); }};
}

// True when the heat kernel is below the double range: it is bounded by
// t^{−n/2}(1 + ρ/t)^{n+1}e^{−ρ²/4t}, while the jet chains would meet ∞/∞.
bool heat_underflows(int n, double t, double rho) {
  return rho * rho / (4.0 * t) > 800.0 + (n + 1) * std::log1p(rho / t) + 0.5 * n * std::abs(std::log(t));
}

}  // namespace

void HeatParams::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive");
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be >= 0");
}

void PoissonParams::validate() const {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(y > 0.0 && y < pi)) throw DomainError("hyperbolic Poisson height must lie in (0, pi)");
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be >= 0");
}

QuadResult heat_raise_odd(const HeatParams& p) {
  p.validate();
  if (p.n % 2 == 0) throw DomainError("heat_raise_odd needs odd n");
  if (heat_underflows(p.n, p.t, p.rho)) return {0.0, 0.0, 0};
  const int k = (p.n - 1) / 2;
  const double v = raise_radial(Space::hyperbolic(), euclid::gaussian_generator(p.t), k, p.rho);
  return {v, 4.0 * kEps * (k + 1) * std::abs(v), 1};
}

QuadResult heat_descent_even(const HeatParams& p, EvenVariant variant, double tol) {
  p.validate();
  check_tol(tol);
  if (p.n % 2 == 1) throw DomainError("heat_descent_even needs even n");
  if (heat_underflows(p.n, p.t, p.rho)) return {0.0, 0.0, 0};
  const int k = (p.n - 2) / 2;
  if (variant == EvenVariant::inside) {
    const double t = p.t;
    auto f = [&](double s) { return raise_radial(Space::hyperbolic(), h3_generator(t), k, s); };
    return descend(f, p.rho, gaussian_extent(t, p.rho, tol), tol);
  }
  H2Jet h2{p.t, tol};
  if (k == 0) {
    const double t = p.t;
    auto f = [&](double s) { return h3_jet_at(t, s, 0).value(); };
    return descend(f, p.rho, gaussian_extent(t, p.rho, tol), tol);
  }
  RadialGenerator g{h2};
  g.analytic_at_origin = false;
  g.scale = std::sqrt(p.t);
  const double v = raise_radial(Space::hyperbolic(), g, k, p.rho);
  return {v, std::max(*h2.rel_err, 4 * kEps) * std::abs(v), 0};
}

QuadResult heat_kernel(int n, double t, double rho, double tol) {
  if (n % 2 == 1) return heat_raise_odd({n, t, rho});
  return heat_descent_even({n, t, rho}, EvenVariant::outside, tol);
}

QuadResult heat_descent(int n, double t, double rho, double tol) {
  HeatParams{n, t, rho}.validate();
  check_tol(tol);
  auto f = [&](double s) { return heat_kernel(n + 1, t, s, tol).value; };
  return descend(f, rho, gaussian_extent(t, rho, tol), tol);
}

double poisson_closed(const PoissonParams& p) {
  p.validate();
  const double sr = std::sinh(p.rho / 2.0), sy = std::sin(p.y / 2.0);
  // cosh ρ − cos y = 2 sinh²(ρ/2) + 2 sin²(y/2)
  const double d = 2.0 * (sr * sr + sy * sy);
  return std::tgamma(half_power(p.n)) / std::pow(2.0 * pi, half_power(p.n)) * std::sin(p.y) *
         std::pow(d, -half_power(p.n));
}

Jet poisson_closed_jet(int n, double y, double center, int order) {
  PoissonParams{n, y, center}.validate();
  const Jet x = Jet::variable(center, order);
  const Jet sr = sinh(x * 0.5);
  const double sy = std::sin(y / 2.0);
  const Jet d = (sr * sr + sy * sy) * 2.0;
  return pow(d, -half_power(n)) *
         (std::tgamma(half_power(n)) / std::pow(2.0 * pi, half_power(n)) * std::sin(y));
}

QuadResult poisson_descent(int n, double y, double rho, double tol) {
  PoissonParams{n, y, rho}.validate();
  check_tol(tol);
  auto f = [&](double s) { return poisson_closed({n + 1, y, s}); };
  return descend(f, rho, exponential_extent(n, tol), tol);
}

QuadResult poisson_raise(const PoissonParams& p) {
  p.validate();
  const int base = p.n % 2 == 1 ? 1 : 2;
  const int k = (p.n - base) / 2;
  const double y = p.y;
  const RadialGenerator g{[base, y](double c, int order) { return poisson_closed_jet(base, y, c, order); }};
  const double v = raise_radial(Space::hyperbolic(), g, k, p.rho);
  return {v, 4.0 * kEps * (k + 1) * std::abs(v), 1};
}

QuadResult heat_gruet(int n, double t, double rho, const ContourSpec& spec) {
  HeatParams{n, t, rho}.validate();
  if (!(spec.sigma > 0.0 && spec.sigma < 2.0 * pi))
    throw ContourError("the hyperbolic contour needs sigma in (0, 2pi)");
  const Mp p = Mp(n + 1) / 2;
  const MpComplex ch(cosh(Mp(rho)));
  auto shape = [&](const MpComplex& y) { return sin(y) * pow(ch - cos(y), -p); };
  const double scale = std::tgamma(half_power(n)) / std::pow(2.0 * pi, half_power(n));
  return bromwich_heat(shape, scale, t, spec);
}

QuadResult heat_gruet(int n, double t, double rho, double tol) {
  return heat_gruet(n, t, rho, ContourSpec::gaussian(kDefaultSigma, t, rho, tol));
}

QuadResult heat_gruet_classic(int n, double t, double rho, double tol) {
  HeatParams{n, t, rho}.validate();
  check_tol(tol);
  const double tau = 2.0 * t;
  // The integrand peaks near ξ = τ with size e^{π²/2τ}; truncate where the
  // Gaussian factor e^{−ξ²/2τ + ξ} has fallen by that amplification plus
  // the result's own e^{−ρ²/4t} and the tolerance.
  const double R = pi * pi / (2.0 * tau) + rho * rho / (4.0 * t) + tail_nats(tol);
  const double xi_max = tau + std::sqrt(tau * tau + 2.0 * tau * R);
  const Mp mtau(tau), mpi = boost::math::constants::pi<Mp>(), p = Mp(n + 1) / 2, ch = cosh(Mp(rho));
  const Mp pi2 = mpi * mpi;
  auto f = [&](const Mp& xi) {
    return exp((pi2 - xi * xi) / (2 * mtau)) * sinh(xi) * sin(mpi * xi / mtau) * pow(ch + cosh(xi), -p);
  };
  // Start with panels no wider than half an oscillation period of sin(πξ/τ).
  const int panels = std::max(8, static_cast<int>(std::ceil(xi_max / tau)));
  std::vector<Mp> breaks;
  for (int i = 0; i <= panels; ++i) breaks.push_back(Mp(xi_max) * i / panels);
  const double K = std::tgamma(half_power(n)) / (std::pow(2.0, n / 2.0) * std::pow(pi, n / 2.0 + 1.0));
  const double c = K / std::sqrt(tau);
  try {
    const auto r = adaptive_gauss_kronrod<Mp, Mp, 31>(f, breaks, tol);
    return {c * to_double(r.value), c * r.err_estimate, r.n_evals};
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what(), c * e.best_estimate(), c * e.err_estimate());
  }
}

}  // namespace ck::hyperbolic
