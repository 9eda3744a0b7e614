#include "ck/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "ck/errors.hpp"
#include "ck/parallel.hpp"
#include "ck/representations.hpp"
#include "ck/sphere.hpp"

namespace ck::validation {

namespace {

using analysis::Check;
using analysis::GridPoint;
using analysis::ValidationReport;

// A check plus the identity it reports under if it throws.
struct Task {
  ValidationReport header;
  std::function<ValidationReport()> fn;
};

const std::vector<double> kTimes{0.1, 1.4, 2.7, 4.0};
const std::vector<double> kFlatR{0.0, 1.0, 2.0, 3.0};
const std::vector<double> kSphereR{0.2, 1.1, 2.0, 2.9};
const std::vector<double> kHypR{0.2, 1.4666666666666666, 2.7333333333333334, 4.0};
const std::vector<double> kMassTimes{0.25, 0.5, 1.0, 2.0};

const std::vector<Space> kSpaces{Space::euclidean(), Space::sphere(), Space::hyperbolic()};

std::vector<int> dims(Space s) {
  if (s.curvature() == Curvature::positive) return {1, 2, 3};
  return {1, 2, 3, 4, 5};
}

bool selected(const SuiteOptions& o, Space s, int n) {
  return (!o.space || *o.space == s) && (!o.n || *o.n == n);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x + 0.0;  // no "-0"
  return os.str();
}

ValidationReport blank(std::string suite, Space s, int n, KernelKind k) {
  ValidationReport r;
  r.suite = std::move(suite);
  r.space = s;
  r.n = n;
  r.kind = k;
  return r;
}

Check& add_check(ValidationReport& r, std::string name, double value, double threshold, bool pass,
                 std::string detail = {}) {
  r.flags.push_back({std::move(name), value, threshold, pass, std::move(detail)});
  return r.flags.back();
}

// Runs a check, turning library errors into a failed flag.
ValidationReport guarded(const Task& task) {
  try {
    return task.fn();
  } catch (const Error& e) {
    ValidationReport r = task.header;
    r.cell_errors.push_back(e.what());
    add_check(r, "completed", 1.0, 0.0, false, e.what());
    return r;
  }
}

double rel(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

double heat_mass(Space s, int n, double t, double tol) {
  auto k = [&](double r) { return kernel_value({s, n, KernelKind::heat, t, r}, Rep::automatic, tol * 1e-2); };
  return analysis::mass(k, s, n, tol, 1.0 + std::sqrt(t) + (s.curvature() == Curvature::negative ? t : 0.0)).value;
}

double poisson_mass(Space s, int n, double y, double tol) {
  auto k = [&](double r) { return kernel_value({s, n, KernelKind::poisson, y, r}, Rep::closed); };
  return analysis::mass(k, s, n, tol, 1.0 + y).value;
}

// ---- representations --------------------------------------------------------

std::vector<Rep> reps_for(Space s, int n, KernelKind k) {
  std::vector<Rep> out;
  const KernelQuery q{s, n, k, 1.0, 0.5};
  for (Rep r : all_reps()) {
    // Curved-space subordination is the subject of its own suite.
    if (r == Rep::subordinate && s.curvature() != Curvature::flat) continue;
    if (supports(q, r)) out.push_back(r);
  }
  return out;
}

void add_representation_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  const double tol = eval_tol(o.profile);
  for (Space s : kSpaces) {
    for (int n : dims(s)) {
      if (!selected(o, s, n)) continue;
      const auto& rs = s.curvature() == Curvature::flat ? kFlatR
                       : s.curvature() == Curvature::positive ? kSphereR
                                                              : kHypR;
      const double heat_thr = s.curvature() == Curvature::flat ? 1e-8 : 1e-7;
      tasks.push_back({blank("representations", s, n, KernelKind::heat), [=, &rs] {
        return analysis::compare(s, n, KernelKind::heat, kTimes, rs, reps_for(s, n, KernelKind::heat), heat_thr, tol);
      }});
      const std::vector<double> ys = s.curvature() == Curvature::negative ? std::vector<double>{0.25, 1.0, 2.0, 3.0}
                                                                          : std::vector<double>{0.25, 1.0, 2.0, 4.0};
      tasks.push_back({blank("representations", s, n, KernelKind::poisson), [=, &rs] {
        return analysis::compare(s, n, KernelKind::poisson, ys, rs, reps_for(s, n, KernelKind::poisson), 1e-8, tol);
      }});
    }
  }

  // Moving the contour within its admissible region must not change the value.
  struct Contour {
    Space s;
    int n;
    double t, r, sigma;
  };
  for (const Contour c : {Contour{Space::euclidean(), 3, 1.0, 1.0, 0.5}, Contour{Space::sphere(), 2, 1.0, 1.0, 1.0},
                          Contour{Space::hyperbolic(), 3, 1.0, 1.0, pi}}) {
    if (!selected(o, c.s, c.n)) continue;
    tasks.push_back({blank("representations", c.s, c.n, KernelKind::heat), [=] {
      auto r = blank("representations", c.s, c.n, KernelKind::heat);
      r.reps = {Rep::gruet};
      EvalOptions base;
      base.tol = tol;
      base.sigma = c.sigma;
      const auto ref = evaluate({c.s, c.n, KernelKind::heat, c.t, c.r}, Rep::gruet, base).result;
      for (double f : {0.5, 1.5}) {
        EvalOptions moved = base;
        moved.sigma = c.sigma * f;
        const auto v = evaluate({c.s, c.n, KernelKind::heat, c.t, c.r}, Rep::gruet, moved).result;
        const double budget = ref.err_estimate + v.err_estimate;
        const double d = std::abs(v.value - ref.value);
        add_check(r, "contour shift sigma x" + fmt(f), d, budget, d <= budget,
                  "|delta| against the sum of error estimates");
      }
      return r;
    }});
  }

  // Both doubling forms of the sphere Poisson kernel.
  for (int n : {1, 2}) {
    if (!selected(o, Space::sphere(), n)) continue;
    tasks.push_back({blank("representations", Space::sphere(), n, KernelKind::poisson), [=] {
      auto r = blank("representations", Space::sphere(), n, KernelKind::poisson);
      double dc = 0.0, da = 0.0, dca = 0.0;
      for (double y : {0.3, 1.0, 2.5})
        for (double phi : {0.4, 2.2}) {
          const double ref = sphere::poisson_closed({n, y, phi});
          const double c = sphere::poisson_doubling(n, y, phi, sphere::DoublingVariant::cosine, tol).value;
          const double a = sphere::poisson_doubling(n, y, phi, sphere::DoublingVariant::angle, tol).value;
          dc = std::max(dc, rel(c, ref));
          da = std::max(da, rel(a, ref));
          dca = std::max(dca, rel(c, a));
        }
      r.add_flag("doubling (cosine) vs closed", dc, 1e-8);
      r.add_flag("doubling (angle) vs closed", da, 1e-8);
      r.add_flag("doubling cosine vs angle", dca, 1e-8);
      return r;
    }});
  }
}

// ---- mass and shift ---------------------------------------------------------

analysis::ShiftFit measured_shift(Space s, int n, double tol, std::vector<analysis::MassRow>* table = nullptr) {
  auto m = [&](double t) {
    const double v = heat_mass(s, n, t, tol);
    if (table) table->push_back({t, v});
    return v;
  };
  return analysis::fit_spectral_shift(m, kMassTimes);
}

void add_mass_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  const double tol = std::min(eval_tol(o.profile), 1e-12);
  for (Space s : kSpaces)
    for (int n : dims(s)) {
      if (!selected(o, s, n)) continue;
      tasks.push_back({blank("mass", s, n, KernelKind::heat), [=] {
        auto r = blank("mass", s, n, KernelKind::heat);
        r.params = kMassTimes;
        const auto fit = measured_shift(s, n, tol, &r.mass_table);
        r.fitted_shift = fit;
        for (const auto& [t, m] : r.mass_table) {
          if (s.curvature() == Curvature::flat || (s.curvature() == Curvature::positive && n == 1))
            r.add_flag("mass(t=" + fmt(t) + ") = 1", std::abs(m - 1.0), 1e-10);
          if (s.curvature() == Curvature::negative && n == 3)
            r.add_flag("mass(t=" + fmt(t) + ") = e^t", std::abs(m - std::exp(t)), 1e-8);
        }
        const double lam = spectral_shift(s, n);
        const double thr = s.curvature() == Curvature::flat || (s.curvature() == Curvature::positive && n == 1) ? 1e-8 : 1e-6;
        r.add_flag("fitted shift = " + fmt(lam), std::abs(fit.slope - lam), thr,
                   "slope " + fmt(fit.slope) + " +/- " + fmt(fit.width));
        return r;
      }});
      // Poisson masses. On the hyperboloid the mass integral diverges for
      // n ≥ 3: the kernel decays like e^{−(n+1)ρ/2} against e^{(n−1)ρ}.
      if (s.curvature() == Curvature::negative && n >= 3) continue;
      tasks.push_back({blank("mass", s, n, KernelKind::poisson), [=] {
        auto r = blank("mass", s, n, KernelKind::poisson);
        const std::vector<double> ys = {0.5, 1.0, 2.0};
        r.params = ys;
        for (double y : ys) r.mass_table.push_back({y, poisson_mass(s, n, y, tol)});
        const double m05 = r.mass_table[0].mass, m1 = r.mass_table[1].mass;
        switch (s.curvature()) {
          case Curvature::flat:
            for (const auto& [y, m] : r.mass_table) r.add_flag("mass(y=" + fmt(y) + ") = 1", std::abs(m - 1.0), 1e-10);
            break;
          case Curvature::positive:
            r.add_flag("M(1) = M(0.5)^2", std::abs(m1 - m05 * m05), 1e-10);
            break;
          case Curvature::negative:
            if (n == 1)
              for (const auto& [y, m] : r.mass_table)
                r.add_flag("mass(y=" + fmt(y) + ") = 1 - y/pi", std::abs(m - (1.0 - y / pi)), 1e-10);
            add_check(r, "multiplicative in y", std::abs(m1 - m05 * m05), 0.0, true,
                      "informational: M(1) - M(0.5)^2 = " + fmt(m1 - m05 * m05));
            break;
        }
        return r;
      }});
    }
}

// ---- PDE residuals ----------------------------------------------------------

void add_pde_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  // Finite differences need kernel values far below the residual threshold.
  const double tol = 1e-13;
  for (Space s : kSpaces)
    for (int n : dims(s))
      for (KernelKind kind : {KernelKind::heat, KernelKind::poisson}) {
        if (!selected(o, s, n)) continue;
        tasks.push_back({blank("pde", s, n, kind), [=] {
          auto r = blank("pde", s, n, kind);
          const auto fit = measured_shift(s, n, 1e-12);
          r.fitted_shift = fit;
          const std::vector<double> params{0.3, 1.0, 2.5}, rs{0.5, 1.2, 2.0};
          r.params = params;
          r.rs = rs;
          std::vector<GridPoint> grid;
          for (double a : params)
            for (double x : rs) grid.push_back({a, x});
          auto u = [&](double a, double x) { return kernel_value({s, n, kind, a, x}, Rep::automatic, tol); };
          const auto res = analysis::pde_residual(u, s, n, kind, grid, fit.slope);
          r.pde_residual_max = res.max_rel;
          r.add_flag("max relative residual", res.max_rel, 1e-5,
                     "shift " + fmt(fit.slope) + ", worst at (" + fmt(res.at.param) + ", " + fmt(res.at.r) + ")");
          const auto rr = analysis::richardson(u, s, n, kind, {1.0, 1.2}, fit.slope, 1e-2);
          add_check(r, "second-order refinement", rr.ratio, 4.0, rr.ratio > 3.0 && rr.ratio < 5.0,
                    "residual ratio under step halving (expect 4): " + fmt(rr.coarse) + " -> " + fmt(rr.fine));
          return r;
        }});
      }
}

// ---- subordination ----------------------------------------------------------

void add_subordination_tasks(std::vector<Task>& tasks, std::vector<std::function<analysis::PairingReport()>>& sweeps,
                             const SuiteOptions& o) {
  const double tol = eval_tol(o.profile);
  for (int n : dims(Space::euclidean())) {
    if (!selected(o, Space::euclidean(), n)) continue;
    tasks.push_back({blank("subordination", Space::euclidean(), n, KernelKind::poisson), [=] {
      auto r = analysis::compare(Space::euclidean(), n, KernelKind::poisson, {0.25, 1.0, 2.0, 4.0}, kFlatR,
                                 {Rep::closed, Rep::subordinate}, 1e-8, tol);
      r.suite = "subordination";
      return r;
    }});
  }
  for (Space s : {Space::sphere(), Space::hyperbolic()})
    for (int n : {1, 3}) {
      if (!selected(o, s, n)) continue;
      sweeps.push_back([=] { return analysis::subordination_sweep(s, n, 1.0, 0.8, tol); });
    }
}

// ---- semigroup --------------------------------------------------------------

void add_semigroup_tasks(std::vector<Task>& tasks, const SuiteOptions& o) {
  const double tol = std::min(eval_tol(o.profile), 1e-11);
  struct Case {
    Space s;
    int n;
    double t, u, r, thr;
  };
  for (const Case c : {Case{Space::euclidean(), 1, 0.5, 0.5, 1.0, 1e-9}, Case{Space::euclidean(), 3, 0.3, 0.7, 2.0, 1e-8},
                       Case{Space::hyperbolic(), 3, 0.5, 0.5, 1.0, 1e-5}}) {
    if (!selected(o, c.s, c.n)) continue;
    tasks.push_back({blank("semigroup", c.s, c.n, KernelKind::heat), [=] {
      auto r = blank("semigroup", c.s, c.n, KernelKind::heat);
      r.params = {c.t, c.u};
      r.rs = {c.r};
      const auto g = analysis::semigroup_check(c.s, c.n, c.t, c.u, c.r, tol);
      r.add_flag("H(t) * H(s) = H(t+s)", g.rel_deviation, c.thr,
                 "convolution " + fmt(g.convolution) + ", reference " + fmt(g.reference));
      return r;
    }});
  }
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "representations") return Suite::representations;
  if (name == "pde") return Suite::pde;
  if (name == "mass") return Suite::mass;
  if (name == "subordination") return Suite::subordination;
  if (name == "semigroup") return Suite::semigroup;
  if (name == "all") return Suite::all;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

TolProfile parse_profile(std::string_view name) {
  if (name == "default") return TolProfile::standard;
  if (name == "strict") return TolProfile::strict;
  throw DomainError("unknown tolerance profile '" + std::string(name) + "'");
}

double eval_tol(TolProfile p) { return p == TolProfile::strict ? 1e-12 : kDefaultTol; }

bool SuiteResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

SuiteResult run(Suite suite, const SuiteOptions& o) {
  std::vector<Task> tasks;
  std::vector<std::function<analysis::PairingReport()>> sweeps;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::representations) add_representation_tasks(tasks, o);
  if (all || suite == Suite::pde) add_pde_tasks(tasks, o);
  if (all || suite == Suite::mass) add_mass_tasks(tasks, o);
  if (all || suite == Suite::subordination) add_subordination_tasks(tasks, sweeps, o);
  if (all || suite == Suite::semigroup) add_semigroup_tasks(tasks, o);

  SuiteResult out;
  out.reports = parallel_map<ValidationReport>(tasks.size(), [&](std::size_t i) { return guarded(tasks[i]); }, o.jobs);
  out.pairings = parallel_map<analysis::PairingReport>(sweeps.size(), [&](std::size_t i) { return sweeps[i](); }, o.jobs);
  // Each pairing sweep becomes a one-flag report.
  for (const auto& p : out.pairings) {
    auto r = blank("subordination", p.space, p.n, KernelKind::poisson);
    r.params = {p.y};
    r.rs = {p.r};
    const auto& best = p.rows[p.best];
    const std::string pairing = std::string(to_string(best.convention)) + " convention, extra shift " + fmt(best.shift);
    if (p.space.curvature() == Curvature::positive)
      r.add_flag("Poisson kernel = subordinated heat kernel", best.rel_diff, 1e-8, "pairing: " + pairing);
    else
      add_check(r, "Poisson kernel is not a subordinated semigroup", best.rel_diff, 1e-3, best.rel_diff > 1e-3,
                "closest pairing " + pairing + " differs by " + fmt(best.rel_diff));
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace ck::validation
