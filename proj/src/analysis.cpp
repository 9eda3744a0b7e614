#include "ck/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ck/errors.hpp"
#include "ck/euclid.hpp"

namespace ck::analysis {

namespace {

double rel_diff(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

double heat_paper(Space space, int n, double t, double r, double tol) {
  return kernel_value({space, n, KernelKind::heat, t, r}, Rep::automatic, tol);
}

}  // namespace

QuadResult subordinate(const HeatEval& heat, int n, double y, double r, double tol) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("y must be positive");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  auto f = [&](double v) {
    const double g = std::exp(-v * v * y * y);
    if (g == 0.0 || v == 0.0) return 0.0;
    return g * heat(1.0 / (4.0 * v * v), r);
  };
  // The integrand is concentrated where e^{−v²(y²+r²)} v^n peaks.
  const double scale = std::sqrt(std::max(1.0, n / 2.0)) / std::hypot(y, r);
  QuadResult q = integrate_to_infinity(f, 0.0, scale, tol);
  const double c = 2.0 * y / std::sqrt(pi);
  q.value *= c;
  q.err_estimate *= c;
  if (!std::isfinite(q.value)) throw ConvergenceError("subordination integral diverges", q.value, q.err_estimate);
  return q;
}

PairingReport subordination_sweep(Space space, int n, double y, double r, double tol) {
  PairingReport rep;
  rep.space = space;
  rep.n = n;
  rep.y = y;
  rep.r = r;
  rep.closed = kernel_value({space, n, KernelKind::poisson, y, r}, Rep::closed);
  const double lam = (n - 1) * (n - 1) / 4.0;
  std::vector<double> shifts{-lam, 0.0, lam};
  if (lam == 0.0) shifts = {0.0};
  for (Convention c : {Convention::paper, Convention::markovian}) {
    for (double s : shifts) {
      PairingRow row;
      row.convention = c;
      row.shift = s;
      auto heat = [&](double t, double rr) {
        EvalOptions o;
        o.convention = c;
        o.tol = tol;
        o.log_scale = -s * t;
        return evaluate({space, n, KernelKind::heat, t, rr}, Rep::automatic, o).result.value;
      };
      try {
        row.value = subordinate(heat, n, y, r, tol).value;
        row.rel_diff = rel_diff(row.value, rep.closed);
      } catch (const Error& e) {
        row.note = e.what();
      }
      rep.rows.push_back(row);
    }
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].rel_diff < rep.rows[rep.best].rel_diff) rep.best = i;
  return rep;
}

QuadResult mass(const RadialEval& kernel, Space space, int n, double tol, double scale) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  const double omega = sphere_surface_coeff(n);
  auto f = [&](double r) {
    const double k = kernel(r);
    if (k == 0.0 || n == 1) return omega * k;
    if (space.curvature() == Curvature::negative && r > 300.0) {
      // sinh r overflows long before a slowly decaying kernel underflows.
      const double log_w = r - std::log(2.0) + std::log1p(-std::exp(-2.0 * r));
      return omega * std::copysign(std::exp(std::log(std::abs(k)) + (n - 1) * log_w), k);
    }
    return omega * k * std::pow(weight(space, r), n - 1);
  };
  if (space.curvature() == Curvature::positive) return integrate_adaptive(f, 0.0, pi, tol);
  return integrate_to_infinity(f, 0.0, scale, tol);
}

ShiftFit fit_spectral_shift(const std::function<double(double)>& mass_of_t, const std::vector<double>& t_grid) {
  if (t_grid.size() < 3) throw DomainError("the shift fit needs at least three times");
  std::vector<double> ys;
  for (double t : t_grid) {
    const double m = mass_of_t(t);
    if (!(m > 0.0)) throw DomainError("mass must be positive to fit a shift");
    ys.push_back(std::log(m));
  }
  const double k = static_cast<double>(t_grid.size());
  double mt = 0.0, my = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    mt += t_grid[i] / k;
    my += ys[i] / k;
  }
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    stt += (t_grid[i] - mt) * (t_grid[i] - mt);
    sty += (t_grid[i] - mt) * (ys[i] - my);
  }
  if (stt == 0.0) throw DomainError("the shift fit needs distinct times");
  ShiftFit fit;
  fit.slope = sty / stt;
  fit.intercept = my - fit.slope * mt;
  double ss = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double e = ys[i] - fit.intercept - fit.slope * t_grid[i];
    ss += e * e;
  }
  fit.rms_residual = std::sqrt(ss / k);
  fit.width = std::sqrt(ss / (k - 2.0) / stt);
  return fit;
}

namespace {

double residual_at(const KernelEval& u, Space space, int n, KernelKind kind, GridPoint p, double lambda,
                   double rel_h) {
  const double hp = rel_h * p.param;
  const double hr = rel_h * std::max(1.0, p.r);
  if (!(p.param - hp > 0.0)) throw DomainError("grid parameter must be positive");
  if (!(p.r - hr > 0.0) || !space.contains(p.r + hr))
    throw SingularPointError("residual stencil reaches a pole or the domain edge");
  const double u0 = u(p.param, p.r);
  const double up = u(p.param, p.r + hr), um = u(p.param, p.r - hr);
  const double ur = (up - um) / (2.0 * hr);
  const double urr = (up - 2.0 * u0 + um) / (hr * hr);
  const double drift = (n - 1) * weight_derivative(space, p.r) / weight(space, p.r) * ur;
  const double pp = u(p.param + hp, p.r), pm = u(p.param - hp, p.r);
  double res, size;
  if (kind == KernelKind::heat) {
    const double ut = (pp - pm) / (2.0 * hp);
    res = urr + drift + lambda * u0 - ut;
    size = std::abs(urr) + std::abs(drift) + std::abs(lambda * u0) + std::abs(ut);
  } else {
    const double uyy = (pp - 2.0 * u0 + pm) / (hp * hp);
    res = uyy + urr + drift + lambda * u0;
    size = std::abs(uyy) + std::abs(urr) + std::abs(drift) + std::abs(lambda * u0);
  }
  return size == 0.0 ? 0.0 : std::abs(res) / size;
}

}  // namespace

Residual pde_residual(const KernelEval& u, Space space, int n, KernelKind kind, const std::vector<GridPoint>& grid,
                      double lambda, double rel_h) {
  if (n < 1) throw DomainError("dimension must be >= 1");
  Residual out;
  for (const GridPoint& p : grid) {
    const double r = residual_at(u, space, n, kind, p, lambda, rel_h);
    if (r > out.max_rel || std::isnan(r)) {
      out.max_rel = r;
      out.at = p;
    }
  }
  return out;
}

Refinement richardson(const KernelEval& u, Space space, int n, KernelKind kind, GridPoint p, double lambda,
                      double rel_h) {
  Refinement r;
  r.coarse = residual_at(u, space, n, kind, p, lambda, rel_h);
  r.fine = residual_at(u, space, n, kind, p, lambda, rel_h / 2.0);
  r.ratio = r.fine == 0.0 ? std::numeric_limits<double>::infinity() : r.coarse / r.fine;
  return r;
}

bool ValidationReport::passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const Check& c) { return c.pass; });
}

Check& ValidationReport::add_flag(std::string name, double value, double threshold, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = threshold;
  c.pass = value <= threshold;
  c.detail = std::move(detail);
  flags.push_back(std::move(c));
  return flags.back();
}

ValidationReport compare(Space space, int n, KernelKind kind, const std::vector<double>& params,
                         const std::vector<double>& rs, const std::vector<Rep>& reps, double threshold, double tol) {
  ValidationReport report;
  report.suite = "representations";
  report.space = space;
  report.n = n;
  report.kind = kind;
  report.params = params;
  report.rs = rs;
  report.reps = reps;
  const std::size_t m = reps.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) report.pairs.push_back({reps[i], reps[j], 0.0, {0.0, 0.0}});

  EvalOptions opts;
  opts.tol = tol;
  for (double a : params) {
    for (double r : rs) {
      const KernelQuery q{space, n, kind, a, r};
      std::vector<double> v(m, std::numeric_limits<double>::quiet_NaN());
      for (std::size_t i = 0; i < m; ++i) {
        try {
          v[i] = evaluate(q, reps[i], opts).result.value;
        } catch (const Error& e) {
          std::ostringstream os;
          os << to_string(reps[i]) << " at (" << a << ", " << r << "): " << e.what();
          report.cell_errors.push_back(os.str());
        }
      }
      std::size_t k = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++k) {
          if (std::isnan(v[i]) || std::isnan(v[j])) continue;
          const double d = rel_diff(v[i], v[j]);
          if (d > report.pairs[k].max_rel_diff) report.pairs[k] = {reps[i], reps[j], d, {a, r}};
        }
    }
  }
  for (const PairDiff& p : report.pairs) {
    std::ostringstream os;
    os << "max at (" << p.at.param << ", " << p.at.r << ")";
    report.add_flag(std::string(to_string(p.a)) + " vs " + std::string(to_string(p.b)), p.max_rel_diff, threshold,
                    os.str());
  }
  report.add_flag("evaluation errors", static_cast<double>(report.cell_errors.size()), 0.0);
  return report;
}

SemigroupResult semigroup_check(Space space, int n, double t, double s, double r, double tol) {
  if (!(t > 0.0) || !(s > 0.0)) throw DomainError("times must be positive");
  const bool flat = space.curvature() == Curvature::flat;
  const bool hyp = space.curvature() == Curvature::negative;
  if (!((flat && (n == 1 || n == 3)) || (hyp && n == 3)))
    throw DomainError("semigroup check supports flat n in {1, 3} and hyperbolic n = 3");
  if (!(r >= 0.0) || (n == 3 && !(r > 0.0))) throw DomainError("r must be positive");
  auto H = [&](double time, double d) { return heat_paper(space, n, time, d, tol * 1e-2); };

  SemigroupResult out;
  out.reference = H(t + s, r);
  QuadResult q;
  if (n == 1) {
    // Gaussian product peaks at x = r·t/(t+s).
    const double x0 = r * t / (t + s);
    auto f = [&](double x) { return H(t, std::abs(x)) * H(s, std::abs(r - x)); };
    const double scale = std::sqrt(t * s / (t + s));
    const QuadResult right = integrate_to_infinity([&](double u) { return f(x0 + u); }, 0.0, scale, tol);
    const QuadResult left = integrate_to_infinity([&](double u) { return f(x0 - u); }, 0.0, scale, tol);
    q = {right.value + left.value, right.err_estimate + left.err_estimate, right.n_evals + left.n_evals};
  } else {
    // Distances ρ from the first centre and d from the second; the angular
    // integral over the sphere of radius ρ becomes an integral in d.
    const double wr = weight(space, r);
    auto inner = [&](double rho) {
      auto g = [&](double d) { return H(s, d) * weight(space, d); };
      return integrate_adaptive(g, std::abs(r - rho), r + rho, tol * 1e-2).value / (wr * weight(space, rho));
    };
    auto outer = [&](double rho) {
      if (rho == 0.0) return 0.0;
      const double h = H(t, rho);
      if (h == 0.0) return 0.0;
      const double w = weight(space, rho);
      return 2.0 * pi * w * w * h * inner(rho);
    };
    q = integrate_to_infinity(outer, 0.0, std::max(1.0, r), tol);
  }
  out.convolution = q.value;
  out.err_estimate = q.err_estimate;
  out.rel_deviation = rel_diff(out.convolution, out.reference);
  return out;
}

}  // namespace ck::analysis
