#include "ck/raise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ck/errors.hpp"

namespace ck {

namespace {

Jet apply_once(Space space, const Jet& f) {
  const Jet d = f.derivative();
  const Jet w = weight_jet(space, f.center(), d.order());
  return d / w * (-1.0 / (2.0 * pi));
}

Jet apply_once_at_pole(Space space, const Jet& f) {
  const Jet d = f.derivative();
  const Jet w = weight_jet(space, f.center(), d.order());
  return divide_removable(d, w) * (-1.0 / (2.0 * pi));
}

void check_order(int order) {
  if (order > kMaxJetOrder)
    throw DomainError("jet order " + std::to_string(order) + " exceeds the engine limit");
}

// D^k g summed as a series about the pole. Returns false when the series
// has not converged at the requested offset or cancels badly.
bool pole_series(Space space, const RadialGenerator& g, int k, double pole, double r,
                 double* out) {
  const double d = std::abs(r - pole);
  for (int spare = 16; 2 * k + spare <= kMaxJetOrder; spare *= 2) {
    Jet j = g.jet(pole, 2 * k + spare);
    for (int i = 0; i < k; ++i) j = apply_once_at_pole(space, j);
    const auto c = j.coeffs();
    double sum = 0.0, mag = 0.0, tail = 0.0, p = 1.0;
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i, p *= d) {
      const double term = c[i] * p;
      sum += term;
      mag += std::abs(term);
      if (i + 4 >= m) tail = std::max(tail, std::abs(term));
    }
    if (tail <= 1e-16 * mag) {
      if (mag > 1e4 * std::abs(sum)) return false;
      *out = sum;
      return true;
    }
    if (d == 0.0) break;
  }
  return false;
}

double node_spacing(const RadialGenerator& g) {
  return kPoleNodeSpacing * std::min(1.0, 5.0 * g.scale);
}

// Neville interpolation in s = (r − pole)², the variable in which every
// smooth radial function is analytic near the pole.
double pole_extrapolation(Space space, const RadialGenerator& g, int k, double pole,
                          double r) {
  constexpr int kNodes = 5;
  const double dir = pole == 0.0 ? 1.0 : -1.0;
  std::array<double, kNodes> s{}, v{};
  for (int j = 0; j < kNodes; ++j) {
    const double h = node_spacing(g) * (j + 1);
    s[j] = h * h;
    v[j] = raise_operator(space, g, k, pole + dir * h);
  }
  const double target = (r - pole) * (r - pole);
  for (int m = 1; m < kNodes; ++m)
    for (int j = 0; j < kNodes - m; ++j)
      v[j] = ((target - s[j + m]) * v[j] + (s[j] - target) * v[j + 1]) / (s[j] - s[j + m]);
  return v[0];
}

}  // namespace

Jet raise_jet(Space space, const RadialGenerator& g, int k, double r, int extra_order) {
  if (k < 0) throw DomainError("raise count must be >= 0");
  if (!space.contains(r)) throw DomainError("distance outside the domain");
  if (k > 0 && space.is_pole(r))
    throw SingularPointError("raising operator is singular at a zero of the weight");
  check_order(k + extra_order);
  Jet j = g.jet(r, k + extra_order);
  for (int i = 0; i < k; ++i) j = apply_once(space, j);
  return j;
}

double raise_operator(Space space, const RadialGenerator& g, int k, double r) {
  return raise_jet(space, g, k, r, 0).value();
}

double pole_distance(Space space, double r, double* pole) {
  double p = 0.0;
  if (space == Space::sphere() && r > pi / 2) p = pi;
  if (pole) *pole = p;
  return std::abs(r - p);
}

double raise_radial(Space space, const RadialGenerator& g, int k, double r) {
  if (!space.contains(r)) throw DomainError("distance outside the domain");
  if (k == 0) return raise_operator(space, g, 0, r);
  double pole = 0.0;
  const double d = pole_distance(space, r, &pole);
  if (g.analytic_at(pole) && d < kSeriesRadius) {
    double v = 0.0;
    if (pole_series(space, g, k, pole, r, &v)) return v;
    if (d < kPoleRadius)
      throw ConvergenceError("pole series for the raising operator did not converge", v, INFINITY);
  }
  if (d < kPoleRadius * (node_spacing(g) / kPoleNodeSpacing)) return pole_extrapolation(space, g, k, pole, r);
  return raise_operator(space, g, k, r);
}

}  // namespace ck
