// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ck/analysis.hpp"
#include "ck/cli.hpp"
#include "ck/errors.hpp"
#include "ck/euclid.hpp"
#include "ck/hyperbolic.hpp"
#include "ck/raise.hpp"
#include "ck/representations.hpp"
#include "ck/sphere.hpp"
#include "ck/validation.hpp"

using namespace ck;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> linspace(double a, double b, int k) {
  std::vector<double> v;
  for (int i = 0; i < k; ++i) v.push_back(a + (b - a) * i / (k - 1));
  return v;
}

// Worst relative gap between pairs of a report, or +inf if any cell failed.
double worst(const analysis::ValidationReport& r) {
  if (!r.cell_errors.empty()) return INFINITY;
  double w = 0.0;
  for (const auto& p : r.pairs) w = std::max(w, p.max_rel_diff);
  return w;
}

const std::vector<double> kT = linspace(0.1, 4.0, 4);
const std::vector<double> kFlatR = linspace(0.0, 3.0, 4);
const std::vector<double> kHypR = linspace(0.2, 4.0, 4);
const std::vector<double> kPhi = linspace(0.2, 2.9, 4);

Outcome euclidean_cross() {
  const auto t0 = std::chrono::steady_clock::now();
  double w = 0.0;
  for (int n = 1; n <= 5; ++n) {
    w = std::max(w, worst(analysis::compare(Space::euclidean(), n, KernelKind::heat, kT, kFlatR,
                                            {Rep::closed, Rep::raise, Rep::descent, Rep::gruet}, 1e-8)));
    w = std::max(w, worst(analysis::compare(Space::euclidean(), n, KernelKind::poisson, kT, kFlatR,
                                            {Rep::closed, Rep::raise, Rep::descent, Rep::integral, Rep::subordinate},
                                            1e-8)));
  }
  const double secs = seconds_since(t0);
  return {w < 1e-8 && secs < 60.0, "worst pairwise " + num(w) + " (< 1e-8), " + num(secs) + " s (< 60 s)"};
}

Outcome descent_constants() {
  double we = 0.0, wh = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (double t : kT) {
      for (double r : kFlatR)
        we = std::max(we, std::abs(euclid::heat_descent(n, t, r).value / euclid::heat_closed({n, t, r}) - 1));
      for (double r : kHypR) {
        const double lower = hyperbolic::heat_kernel(n, t, r, 1e-12).value;
        wh = std::max(wh, std::abs(hyperbolic::heat_descent(n, t, r, 1e-12).value / lower - 1));
      }
    }
  return {we < 1e-9 && wh < 1e-7, "euclidean |c-1| " + num(we) + " (< 1e-9), hyperbolic |c-1| " + num(wh) + " (< 1e-7)"};
}

Outcome hyperbolic_gruet() {
  double w = 0.0;
  for (int n : {2, 3, 4, 5})
    for (double t : kT)
      for (double r : kHypR) {
        const double ref = n % 2 ? hyperbolic::heat_raise_odd({n, t, r}).value
                                 : hyperbolic::heat_descent_even({n, t, r}, hyperbolic::EvenVariant::outside, 1e-12).value;
        w = std::max(w, rel(hyperbolic::heat_gruet(n, t, r).value, ref));
      }
  return {w < 1e-7, "worst relative " + num(w) + " (< 1e-7), n = 2..5"};
}

Outcome sphere_gruet() {
  double w = 0.0;
  for (int n : {1, 2, 3})
    for (double t : kT)
      for (double p : kPhi) {
        const double ref = n == 1   ? sphere::heat_theta_1(t, p, 1e-12)
                           : n == 2 ? sphere::heat_theta_2(t, p, 1e-12).value
                                    : sphere::heat_raise({n, t, p}, 1e-12).value;
        w = std::max(w, rel(sphere::heat_gruet(n, t, p).value, ref));
      }
  return {w < 1e-7, "worst relative " + num(w) + " (< 1e-7), n = 1..3"};
}

Outcome contour_invariance() {
  struct Case {
    Space s;
    int n;
    double t, r, sigma;
  };
  bool ok = true;
  std::string detail;
  for (const Case c : {Case{Space::euclidean(), 3, 1.0, 1.0, euclid::default_sigma(1.0)},
                       Case{Space::sphere(), 3, 0.5, 1.5, sphere::kDefaultSigma},
                       Case{Space::hyperbolic(), 3, 1.0, 1.0, hyperbolic::kDefaultSigma}}) {
    EvalOptions o;
    o.sigma = c.sigma;
    const KernelQuery q{c.s, c.n, KernelKind::heat, c.t, c.r};
    const auto base = evaluate(q, Rep::gruet, o).result;
    double margin = 0.0;
    for (double f : {0.5, 1.5}) {
      o.sigma = c.sigma * f;
      const auto moved = evaluate(q, Rep::gruet, o).result;
      const double gap = std::abs(moved.value - base.value);
      const double allowed = moved.err_estimate + base.err_estimate;
      ok = ok && gap <= allowed;
      margin = std::max(margin, allowed > 0 ? gap / allowed : INFINITY);
    }
    detail += std::string(detail.empty() ? "" : ", ") + std::string(c.s.name()) + " gap/err " + num(margin);
  }
  return {ok, detail + " (<= 1)"};
}

Outcome normalisation() {
  double flat = 0.0;
  for (int n = 1; n <= 5; ++n)
    for (double a : {0.5, 2.0}) {
      flat = std::max(flat, std::abs(analysis::mass([&](double r) { return euclid::heat_closed({n, a, r}); },
                                                    Space::euclidean(), n, 1e-13, std::sqrt(a)).value - 1));
      flat = std::max(flat, std::abs(analysis::mass([&](double r) { return euclid::poisson_closed({n, a, r}); },
                                                    Space::euclidean(), n, 1e-13, a).value - 1));
    }
  auto h3 = [](double t) {
    return analysis::mass([t](double r) { return hyperbolic::heat_raise_odd({3, t, r}).value; }, Space::hyperbolic(),
                          3, 1e-13, std::sqrt(t) + t)
        .value;
  };
  const std::vector<double> times{0.25, 0.5, 1.0, 2.0};
  double hyp = 0.0;
  for (double t : times) hyp = std::max(hyp, std::abs(h3(t) - std::exp(t)));
  const auto fit = analysis::fit_spectral_shift(h3, times);
  const double circle =
      std::abs(analysis::mass([](double r) { return sphere::heat_theta_1(0.7, r, 1e-13); }, Space::sphere(), 1, 1e-13)
                   .value -
               1);
  const bool ok = flat < 1e-10 && hyp < 1e-8 && std::abs(fit.slope - 1) < 1e-6 && circle < 1e-10;
  return {ok, "flat |M-1| " + num(flat) + " (< 1e-10), H3 |M-e^t| " + num(hyp) + " (< 1e-8), shift " +
                  num(fit.slope) + " (1 ± 1e-6), circle |M-1| " + num(circle) + " (< 1e-10)"};
}

Outcome subordination() {
  double w = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (double y : kT)
      for (double r : kFlatR) {
        auto heat = [n](double t, double x) { return euclid::heat_closed({n, t, x}); };
        w = std::max(w, rel(analysis::subordinate(heat, n, y, r, 1e-12).value, euclid::poisson_closed({n, y, r})));
      }
  std::string pairing;
  for (Space s : {Space::sphere(), Space::hyperbolic()}) {
    const auto rep = analysis::subordination_sweep(s, 3, 1.0, 0.8);
    const auto& best = rep.rows.at(rep.best);
    pairing += std::string(", ") + std::string(s.name()) + " best " + std::string(to_string(best.convention)) +
               " shift " + num(best.shift) + " rel " + num(best.rel_diff);
  }
  return {w < 1e-8, "flat worst " + num(w) + " (< 1e-8)" + pairing};
}

Outcome pde() {
  const auto res = validation::run(validation::Suite::pde);
  double w = 0.0;
  std::string failed;
  for (const auto& r : res.reports) {
    if (r.pde_residual_max) w = std::max(w, *r.pde_residual_max);
    if (!r.passed()) failed += " " + std::string(r.space.name()) + "/" + std::to_string(r.n) + "/" + std::string(to_string(r.kind));
  }
  return {res.passed(), "max residual " + num(w) + " (< 1e-5), second-order ratio checked in " +
                            std::to_string(res.reports.size()) + " reports" + (failed.empty() ? "" : "; failed:" + failed)};
}

Outcome doubling() {
  double w = 0.0, cross = 0.0;
  for (int n : {1, 2})
    for (double y : {0.3, 1.0, 2.5})
      for (double p : {0.5, 2.4}) {
        const double ref = sphere::poisson_closed({n, y, p});
        const double a = sphere::poisson_doubling(n, y, p, sphere::DoublingVariant::cosine, 1e-12).value;
        const double b = sphere::poisson_doubling(n, y, p, sphere::DoublingVariant::angle, 1e-12).value;
        w = std::max({w, rel(a, ref), rel(b, ref)});
        cross = std::max(cross, rel(a, b));
      }
  return {w < 1e-8 && cross < 1e-8, "vs closed " + num(w) + ", between variants " + num(cross) + " (< 1e-8)"};
}

Outcome semigroup() {
  double flat = 0.0;
  flat = std::max(flat, analysis::semigroup_check(Space::euclidean(), 1, 0.5, 0.5, 1.0, 1e-12).rel_deviation);
  flat = std::max(flat, analysis::semigroup_check(Space::euclidean(), 3, 0.3, 0.7, 2.0, 1e-12).rel_deviation);
  const double hyp = analysis::semigroup_check(Space::hyperbolic(), 3, 0.5, 0.5, 1.0, 1e-11).rel_deviation;
  return {flat < 1e-8 && hyp < 1e-5, "flat " + num(flat) + " (< 1e-8), hyperbolic n=3 " + num(hyp) + " (< 1e-5)"};
}

Outcome jets_and_suite() {
  // g = e^{−a r²}: D g = −g′/(2πw), D²g = (g″w − g′w′)/(4π²w³).
  const double a = 0.3;
  const RadialGenerator g{[a](double c, int order) {
    const Jet x = Jet::variable(c, order);
    return exp(x * x * (-a));
  }};
  double w = 0.0;
  for (Space s : {Space::euclidean(), Space::sphere(), Space::hyperbolic()})
    for (double r : {0.4, 1.3, 2.2}) {
      const double e = std::exp(-a * r * r), g1 = -2 * a * r * e, g2 = (4 * a * a * r * r - 2 * a) * e;
      const double wr = weight(s, r), dw = weight_derivative(s, r);
      w = std::max(w, rel(raise_operator(s, g, 1, r), -g1 / (2 * pi * wr)));
      w = std::max(w, rel(raise_operator(s, g, 2, r), (g2 * wr - g1 * dw) / (4 * pi * pi * wr * wr * wr)));
    }
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const char* argv[] = {"ck", "validate", "--suite", "all"};
  const int code = cli::run(4, const_cast<char**>(argv), out, err);
  const double secs = seconds_since(t0);
  return {w < 1e-12 && code == 0 && secs < 600.0, "jet worst " + num(w) + " (< 1e-12); validate --suite all exit " +
                                                      std::to_string(code) + " in " + num(secs) + " s (< 600 s)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"euclidean cross-representation", euclidean_cross},
      {"descent constants", descent_constants},
      {"hyperbolic contour vs raising/descent", hyperbolic_gruet},
      {"spherical contour vs theta", sphere_gruet},
      {"contour deformation invariance", contour_invariance},
      {"normalisation and spectral shift", normalisation},
      {"subordination", subordination},
      {"pde residuals", pde},
      {"poisson doubling", doubling},
      {"semigroup", semigroup},
      {"jet engine and full validation", jets_and_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
