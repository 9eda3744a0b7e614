#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ck/errors.hpp"
#include "ck/jet.hpp"
#include "ck/multiprecision.hpp"

namespace ck {

inline constexpr double kDefaultTol = 1e-10;

template <class V>
struct BasicQuadResult {
  V value;
  double err_estimate = 0.0;
  long n_evals = 0;
};

using QuadResult = BasicQuadResult<double>;

struct QuadLimits {
  /// Maximum bisection depth of any subinterval.
  int max_depth = 60;
  int max_intervals = 100000;
  /// Absolute error floor; the target is max(tol·|value|, abs_tol).
  double abs_tol = 0.0;
};

// Magnitudes used by the error estimator, per value type.
inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(const Mp& v) { return std::abs(to_double(v)); }
inline double quad_norm(const Jet& v) { return max_abs_coeff(v); }
inline double quad_scalar(double v) { return v; }
inline double quad_scalar(const Mp& v) { return to_double(v); }
inline double quad_scalar(const Jet& v) { return v.value(); }

namespace detail {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

template <class V>
bool all_finite(const V& v) {
  return std::isfinite(quad_norm(v));
}
inline bool all_finite(const Mp& v) { return boost::multiprecision::isfinite(v); }

template <class Real, class V>
struct Panel {
  Real a, b;
  V value;
  double err;
  double floor;  // roundoff level below which the estimate cannot improve
  int depth;
};

template <class Real, class V>
struct PanelOrder {
  bool operator()(const Panel<Real, V>& x, const Panel<Real, V>& y) const {
    return x.err - x.floor < y.err - y.floor;
  }
};

// One Gauss–Kronrod panel with the QUADPACK error heuristic.
template <class Real, unsigned Points, class V, class F>
Panel<Real, V> gk_panel(F& f, const Real& a, const Real& b, int depth, long& evals) {
  static_assert(((Points - 1) / 2) % 2 == 1, "Gauss order must be odd");
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& xk = gauss_kronrod<Real, Points>::abscissa();
  const auto& wk = gauss_kronrod<Real, Points>::weights();
  const auto& wg = gauss<Real, (Points - 1) / 2>::weights();

  const Real half = (b - a) / 2;
  const Real mid = a + half;
  std::vector<V> fx;
  fx.reserve(Points);
  const V fc = f(mid);
  if (!all_finite(fc)) throw ConvergenceError("non-finite integrand value", kNaN, kInf);
  V kron = fc * wk[0];
  V gsum = fc * wg[0];
  double resabs = quad_norm(fc) * to_double(wk[0]);
  fx.push_back(fc);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const Real dx = half * xk[i];
    const V f1 = f(mid - dx);
    const V f2 = f(mid + dx);
    if (!all_finite(f1) || !all_finite(f2)) throw ConvergenceError("non-finite integrand value", kNaN, kInf);
    const V s = f1 + f2;
    kron += s * wk[i];
    if (i % 2 == 0) gsum += s * wg[i / 2];
    resabs += (quad_norm(f1) + quad_norm(f2)) * to_double(wk[i]);
    fx.push_back(f1);
    fx.push_back(f2);
  }
  evals += static_cast<long>(Points);

  // resasc: spread of f about its panel mean, used to normalise the estimate.
  const double h = std::abs(to_double(half));
  const double mean = quad_norm(kron) / 2.0;
  double resasc = std::abs(quad_norm(fx[0]) - mean) * to_double(wk[0]);
  for (std::size_t i = 1; i < xk.size(); ++i)
    resasc += (std::abs(quad_norm(fx[2 * i - 1]) - mean) + std::abs(quad_norm(fx[2 * i]) - mean)) *
              to_double(wk[i]);
  resasc *= h;
  resabs *= h;
  // Mp integrands can be finite yet beyond double range; the error
  // bookkeeping is in double, so nothing can be certified.
  if (!std::isfinite(resabs))
    throw ConvergenceError("integrand magnitude exceeds double range", kNaN, kInf);

  V value = kron * half;
  double err = quad_norm(V((kron - gsum) * half));
  if (resasc > 0.0 && err > 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = to_double(Real(std::numeric_limits<Real>::epsilon()));
  const double floor = 50.0 * eps * resabs;
  err = std::max(err, floor);
  return {a, b, std::move(value), err, floor, depth};
}

}  // namespace detail

/// Globally adaptive Gauss–Kronrod quadrature over the given breakpoints.
/// Panels with the largest reducible error are bisected first. V may be a
/// scalar or a Jet (vector-valued; the error norm is the largest coefficient).
template <class Real, class V, unsigned Points = 15, class F>
BasicQuadResult<V> adaptive_gauss_kronrod(F&& f, const std::vector<Real>& breaks, double tol,
                                          const QuadLimits& limits = {}) {
  if (breaks.size() < 2) throw DomainError("quadrature needs an interval");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i - 1] < breaks[i])) throw DomainError("quadrature limits must increase");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  using P = detail::Panel<Real, V>;
  std::priority_queue<P, std::vector<P>, detail::PanelOrder<Real, V>> heap;
  long evals = 0;
  for (std::size_t i = 1; i < breaks.size(); ++i)
    heap.push(detail::gk_panel<Real, Points, V>(f, breaks[i - 1], breaks[i], 0, evals));

  // Exact re-summation over the heap (used at the end; running sums drive
  // the loop).
  auto totals = [&heap]() {
    auto copy = heap;
    V value = copy.top().value;
    double err = copy.top().err;
    copy.pop();
    for (; !copy.empty(); copy.pop()) {
      value += copy.top().value;
      err += copy.top().err;
    }
    return BasicQuadResult<V>{std::move(value), err, 0};
  };

  BasicQuadResult<V> sum = totals();
  double floor = 0.0;
  {
    auto copy = heap;
    for (; !copy.empty(); copy.pop()) floor += copy.top().floor;
  }
  for (;;) {
    const double target = std::max(tol * quad_norm(sum.value), limits.abs_tol);
    if (sum.err_estimate <= target || sum.err_estimate <= floor) break;
    P worst = heap.top();
    if (worst.err <= worst.floor) break;  // only roundoff left anywhere
    if (worst.depth >= limits.max_depth || static_cast<int>(heap.size()) >= limits.max_intervals)
      throw ConvergenceError("adaptive quadrature: subdivision limit reached",
                             quad_scalar(totals().value), sum.err_estimate);
    heap.pop();
    const Real m = worst.a + (worst.b - worst.a) / 2;
    P left = detail::gk_panel<Real, Points, V>(f, worst.a, m, worst.depth + 1, evals);
    P right = detail::gk_panel<Real, Points, V>(f, m, worst.b, worst.depth + 1, evals);
    sum.value += left.value + right.value - worst.value;
    sum.err_estimate += left.err + right.err - worst.err;
    floor += left.floor + right.floor - worst.floor;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }
  BasicQuadResult<V> out = totals();
  out.n_evals = evals;
  if (!detail::all_finite(out.value) || !std::isfinite(out.err_estimate))
    throw ConvergenceError("adaptive quadrature: non-finite result", detail::kNaN, detail::kInf);
  return out;
}

/// ∫_a^b f dx.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol = kDefaultTol, const QuadLimits& limits = {});

/// ∫_a^b f(x)(x−a)^{−1/2} dx via x = a + u², which leaves a regular integrand.
QuadResult integrate_sqrt_endpoint(const std::function<double(double)>& f_regular, double a,
                                   double b, double tol = kDefaultTol,
                                   const QuadLimits& limits = {});

/// ∫_a^∞ f dx via x = a + scale·u/(1−u).
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double scale = 1.0, double tol = kDefaultTol,
                                 const QuadLimits& limits = {});

/// Vertical-line data for a Bromwich-type integral ∫₀^{xi_max} Re f(σ − iξ) dξ.
struct ContourSpec {
  double sigma = 1.0;
  double xi_max = 1.0;
  double tol = kDefaultTol;
  /// Time scale of the Gaussian envelope e^{−ξ²/4t}; 0 when there is none
  /// and no tail bound is added.
  double envelope_t = 0.0;

  /// Truncation chosen so the envelope e^{(σ²+r²−ξ²)/4t} at xi_max sits
  /// ~30 nats below tol relative to the result scale e^{−r²/4t}.
  static ContourSpec gaussian(double sigma, double t, double r, double tol = kDefaultTol);
};

/// ∫₀^{xi_max} Re f(σ − iξ) dξ, evaluated in `Real` arithmetic. The tail
/// beyond xi_max, bounded through the Gaussian envelope, is added to the
/// error estimate. A non-finite integrand means the line meets a
/// singularity and raises ContourError.
template <class Real, unsigned Points = 31>
QuadResult integrate_contour(const std::function<Complex<Real>(const Complex<Real>&)>& f,
                             const ContourSpec& spec) {
  if (!(spec.xi_max > 0.0)) throw DomainError("contour truncation must be positive");
  const Real sigma(spec.sigma);
  auto g = [&](const Real& xi) -> Real {
    const Complex<Real> v = f(Complex<Real>(sigma, -xi));
    if (!boost::math::isfinite(v.re) || !boost::math::isfinite(v.im))
      throw ContourError("integrand singular on the contour; move sigma");
    return v.re;
  };
  // Start from a few panels so oscillations are resolved before the first
  // error estimate is trusted.
  constexpr int kPanels = 8;
  std::vector<Real> breaks;
  for (int i = 0; i <= kPanels; ++i) breaks.push_back(Real(spec.xi_max) * i / kPanels);
  const BasicQuadResult<Real> r = adaptive_gauss_kronrod<Real, Real, Points>(g, breaks, spec.tol);
  double tail = 0.0;
  if (spec.envelope_t > 0.0) {
    const Complex<Real> end = f(Complex<Real>(sigma, -Real(spec.xi_max)));
    tail = to_double(abs(end)) * 2.0 * spec.envelope_t / spec.xi_max;
  }
  return {to_double(r.value), r.err_estimate + tail, r.n_evals};
}

}  // namespace ck
