#include "ck/representations.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ck/analysis.hpp"
#include "ck/errors.hpp"
#include "ck/euclid.hpp"
#include "ck/hyperbolic.hpp"
#include "ck/raise.hpp"
#include "ck/sphere.hpp"

namespace ck {

namespace {

constexpr std::array<std::pair<Rep, std::string_view>, 9> kNames{{
    {Rep::closed, "closed"},
    {Rep::raise, "raise"},
    {Rep::descent, "descent"},
    {Rep::theta, "theta"},
    {Rep::integral, "integral"},
    {Rep::gruet, "gruet"},
    {Rep::gruet_classic, "gruet-classic"},
    {Rep::subordinate, "subordinate"},
    {Rep::automatic, "auto"},
}};

bool is_heat(const KernelQuery& q) { return q.kind == KernelKind::heat; }

QuadResult exact(double v) { return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v), 1}; }

double hyperbolic_h3(double t, double rho) {
  const double ratio = rho == 0.0 ? 1.0 : rho / std::sinh(rho);
  return std::pow(4.0 * pi * t, -1.5) * ratio * std::exp(-rho * rho / (4.0 * t));
}

// Heat kernel in convention c for the subordination integrand, which reaches
// arbitrarily large t as v → 0.
analysis::HeatEval heat_for_subordination(Space space, int n, Convention c, double tol) {
  return [=](double t, double r) {
    EvalOptions o;
    o.convention = c;
    o.tol = tol;
    return evaluate({space, n, KernelKind::heat, t, r}, Rep::automatic, o).result.value;
  };
}

// ln of the factor taking a `paper`-convention heat kernel to `c`.
double log_convention_factor(Space space, int n, double t, Convention c) {
  return c == Convention::markovian ? -spectral_shift(space, n) * t : 0.0;
}

QuadResult scaled(QuadResult r, double log_scale) {
  if (log_scale == 0.0 || r.value == 0.0) return r;
  const double f = std::exp(log_scale);
  r.value *= f;
  r.err_estimate *= f;
  return r;
}

Rep resolve_auto(const KernelQuery& q) {
  if (!is_heat(q)) return Rep::closed;
  switch (q.space.curvature()) {
    case Curvature::flat:
      return Rep::closed;
    case Curvature::positive:
      return q.n <= 2 ? Rep::theta : Rep::raise;
    case Curvature::negative:
      return q.n % 2 == 1 ? Rep::raise : Rep::descent;
  }
  return Rep::gruet;
}

QuadResult run_unscaled(const KernelQuery& q, Rep rep, const EvalOptions& o) {
  const double tol = o.tol;
  const double a = q.param, r = q.r;
  const int n = q.n;
  switch (q.space.curvature()) {
    case Curvature::flat:
      if (is_heat(q)) {
        switch (rep) {
          case Rep::closed: return exact(euclid::heat_closed({n, a, r}));
          case Rep::raise: return euclid::heat_raise({n, a, r}, euclid::EvenVariant::outside, tol);
          case Rep::descent: return euclid::heat_descent(n, a, r, tol);
          case Rep::gruet:
            return euclid::heat_gruet(n, a, r, ContourSpec::gaussian(o.sigma.value_or(euclid::default_sigma(r)), a, r, tol));
          default: break;
        }
      } else {
        switch (rep) {
          case Rep::closed: return exact(euclid::poisson_closed({n, a, r}));
          case Rep::raise: return euclid::poisson_raise({n, a, r}, euclid::EvenVariant::outside, tol);
          case Rep::descent: return euclid::poisson_descent(n, a, r, tol);
          case Rep::integral: return euclid::poisson_integral({n, a, r}, tol);
          case Rep::subordinate:
            return analysis::subordinate(heat_for_subordination(q.space, n, o.convention, tol), n, a, r, tol);
          default: break;
        }
      }
      break;
    case Curvature::positive:
      if (is_heat(q)) {
        switch (rep) {
          case Rep::theta:
            if (n == 1) {
              const double v = sphere::heat_theta_1(a, r, tol);
              return {v, tol * v, 1};
            }
            if (n == 2) return sphere::heat_theta_2(a, r, tol);
            break;
          case Rep::raise: return sphere::heat_raise({n, a, r}, tol);
          case Rep::gruet:
            return sphere::heat_gruet(n, a, r, ContourSpec::gaussian(o.sigma.value_or(sphere::kDefaultSigma), a, r, tol));
          default: break;
        }
      } else {
        switch (rep) {
          case Rep::closed: return exact(sphere::poisson_closed({n, a, r}));
          case Rep::raise: return sphere::poisson_raise({n, a, r});
          case Rep::integral: return sphere::poisson_doubling(n, a, r, sphere::DoublingVariant::cosine, tol);
          case Rep::subordinate:
            return analysis::subordinate(heat_for_subordination(q.space, n, o.convention, tol), n, a, r, tol);
          default: break;
        }
      }
      break;
    case Curvature::negative:
      if (is_heat(q)) {
        switch (rep) {
          case Rep::closed:
            if (n == 1) return exact(euclid::heat_closed({1, a, r}));
            if (n == 3) return exact(hyperbolic_h3(a, r));
            break;
          case Rep::raise:
            if (n % 2 == 1) return hyperbolic::heat_raise_odd({n, a, r});
            break;
          case Rep::descent:
            if (n % 2 == 0) return hyperbolic::heat_descent_even({n, a, r}, hyperbolic::EvenVariant::outside, tol);
            return hyperbolic::heat_descent(n, a, r, tol);
          case Rep::gruet:
            return hyperbolic::heat_gruet(n, a, r,
                                          ContourSpec::gaussian(o.sigma.value_or(hyperbolic::kDefaultSigma), a, r, tol));
          case Rep::gruet_classic: return hyperbolic::heat_gruet_classic(n, a, r, tol);
          default: break;
        }
      } else {
        switch (rep) {
          case Rep::closed: return exact(hyperbolic::poisson_closed({n, a, r}));
          case Rep::raise: return hyperbolic::poisson_raise({n, a, r});
          case Rep::descent: return hyperbolic::poisson_descent(n, a, r, tol);
          case Rep::subordinate:
            return analysis::subordinate(heat_for_subordination(q.space, n, o.convention, tol), n, a, r, tol);
          default: break;
        }
      }
      break;
  }
  throw DomainError(std::string("representation '") + std::string(to_string(rep)) + "' is not available for " +
                    std::string(to_string(q.kind)) + " on " + std::string(q.space.name()) + " in dimension " +
                    std::to_string(n));
}

// Heat values carry e^{o.log_scale}; the sphere's theta-based forms take it
// inside their sums.
QuadResult run(const KernelQuery& q, Rep rep, const EvalOptions& o) {
  if (!is_heat(q)) return run_unscaled(q, rep, o);
  if (q.space.curvature() == Curvature::positive && (rep == Rep::theta || rep == Rep::raise)) {
    if (q.n == 1) {
      const double v = sphere::heat_theta_1(q.param, q.r, o.tol, o.log_scale);
      return {v, o.tol * v, 1};
    }
    if (q.n == 2) return sphere::heat_theta_2(q.param, q.r, o.tol, o.log_scale);
    return sphere::heat_raise({q.n, q.param, q.r}, o.tol, o.log_scale);
  }
  return scaled(run_unscaled(q, rep, o), o.log_scale);
}

bool uses_jets(const KernelQuery& q, Rep rep) {
  if (rep == Rep::raise) return q.n > 2;
  // Even-dimensional descents differentiate the generator under the integral.
  return rep == Rep::descent && q.space.curvature() == Curvature::negative && q.n % 2 == 0 && q.n > 2;
}

}  // namespace

std::string_view to_string(Rep rep) {
  for (const auto& [r, name] : kNames)
    if (r == rep) return name;
  return "?";
}

Rep parse_rep(std::string_view name) {
  for (const auto& [r, known] : kNames)
    if (known == name) return r;
  if (name == "gruet_classic") return Rep::gruet_classic;
  if (name == "automatic") return Rep::automatic;
  throw DomainError("unknown representation '" + std::string(name) + "'");
}

const std::vector<Rep>& all_reps() {
  static const std::vector<Rep> reps{Rep::closed, Rep::raise, Rep::descent, Rep::theta, Rep::integral,
                                     Rep::gruet, Rep::gruet_classic, Rep::subordinate};
  return reps;
}

bool supports(const KernelQuery& q, Rep rep) {
  if (rep == Rep::automatic) return true;
  const bool heat = is_heat(q);
  const int n = q.n;
  switch (q.space.curvature()) {
    case Curvature::flat:
      return heat ? (rep == Rep::closed || rep == Rep::raise || rep == Rep::descent || rep == Rep::gruet)
                  : (rep == Rep::closed || rep == Rep::raise || rep == Rep::descent || rep == Rep::integral ||
                     rep == Rep::subordinate);
    case Curvature::positive:
      return heat ? ((rep == Rep::theta && n <= 2) || rep == Rep::raise || rep == Rep::gruet)
                  : (rep == Rep::closed || rep == Rep::raise || rep == Rep::integral || rep == Rep::subordinate);
    case Curvature::negative:
      return heat ? ((rep == Rep::closed && (n == 1 || n == 3)) || (rep == Rep::raise && n % 2 == 1) ||
                     rep == Rep::descent || rep == Rep::gruet || rep == Rep::gruet_classic)
                  : (rep == Rep::closed || rep == Rep::raise || rep == Rep::descent || rep == Rep::subordinate);
  }
  return false;
}

Evaluation evaluate(const KernelQuery& q, Rep rep, const EvalOptions& options) {
  q.validate();
  if (!(options.tol > 0.0)) throw DomainError("tolerance must be positive");
  EvalOptions opts = options;
  if (is_heat(q)) opts.log_scale += log_convention_factor(q.space, q.n, q.param, opts.convention);
  Evaluation e;
  e.rep = rep == Rep::automatic ? resolve_auto(q) : rep;
  if (rep == Rep::automatic) {
    try {
      e.result = run(q, e.rep, opts);
    } catch (const ConvergenceError& err) {
      if (!supports(q, Rep::gruet)) throw;
      e.warnings.push_back("convergence fallback: " + std::string(to_string(e.rep)) + " failed (" + err.what() +
                           "), used gruet");
      e.rep = Rep::gruet;
      e.result = run(q, e.rep, opts);
    }
  } else {
    e.result = run(q, e.rep, opts);
  }

  double pole = 0.0;
  if (uses_jets(q, e.rep) && pole_distance(q.space, q.r, &pole) < kPoleRadius)
    e.warnings.push_back("near-pole remap: r is within " + std::to_string(kPoleRadius) +
                         " of a pole; value from the pole expansion");
  if (e.result.value == 0.0)
    e.warnings.push_back("truncation at domain edge: value underflows double precision");
  return e;
}

double kernel_value(const KernelQuery& q, Rep rep, double tol) {
  EvalOptions o;
  o.tol = tol;
  return evaluate(q, rep, o).result.value;
}

}  // namespace ck
