#include "ck/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ck/errors.hpp"

namespace ck {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

// Coefficients of sin/cos (or sinh/cosh) of x, computed together since each
// recurrence feeds the other. `sign` is -1 for the circular pair.
std::pair<std::vector<double>, std::vector<double>> paired_series(
    const Jet& x, double s0, double c0, double sign) {
  const int k_max = x.order();
  std::vector<double> s(sz(k_max + 1)), c(sz(k_max + 1));
  s[0] = s0;
  c[0] = c0;
  for (int k = 1; k <= k_max; ++k) {
    double sk = 0.0, ck = 0.0;
    for (int i = 1; i <= k; ++i) {
      sk += i * x[i] * c[sz(k - i)];
      ck += i * x[i] * s[sz(k - i)];
    }
    s[sz(k)] = sk / k;
    c[sz(k)] = sign * ck / k;
  }
  return {std::move(s), std::move(c)};
}

}  // namespace

Jet::Jet(double center, std::vector<double> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("jet needs at least one coefficient");
}

Jet Jet::variable(double center, int order) {
  if (order < 0) throw DomainError("negative jet order");
  std::vector<double> c(sz(order + 1), 0.0);
  c[0] = center;
  if (order >= 1) c[1] = 1.0;
  return Jet(center, std::move(c));
}

Jet Jet::constant(double value, double center, int order) {
  if (order < 0) throw DomainError("negative jet order");
  std::vector<double> c(sz(order + 1), 0.0);
  c[0] = value;
  return Jet(center, std::move(c));
}

double Jet::derivative_value(int k) const {
  if (k < 0 || k > order()) throw DomainError("derivative beyond jet order");
  return std::tgamma(k + 1.0) * coeffs_[sz(k)];
}

Jet Jet::derivative() const {
  if (order() < 1) throw DomainError("cannot differentiate an order-0 jet");
  std::vector<double> d(sz(order()));
  for (int i = 0; i < order(); ++i) d[sz(i)] = (i + 1) * coeffs_[sz(i + 1)];
  return Jet(center_, std::move(d));
}

Jet Jet::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw DomainError("truncation order out of range");
  return Jet(center_, std::vector<double>(coeffs_.begin(),
                                          coeffs_.begin() + new_order + 1));
}

double Jet::evaluate_at(double x) const {
  const double h = x - center_;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

void Jet::require_compatible(const Jet& other) const {
  if (center_ != other.center_ || order() != other.order())
    throw DomainError("jet arithmetic needs equal centers and orders");
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (double& c : r.coeffs_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& other) {
  require_compatible(other);
  const int n = order();
  std::vector<double> out(sz(n + 1), 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += coeffs_[sz(i)] * other.coeffs_[sz(k - i)];
    out[sz(k)] = acc;
  }
  coeffs_ = std::move(out);
  return *this;
}

Jet& Jet::operator/=(const Jet& other) {
  require_compatible(other);
  const double b0 = other.coeffs_[0];
  if (b0 == 0.0) throw DomainError("jet division by a jet with zero value");
  const int n = order();
  std::vector<double> q(sz(n + 1));
  for (int k = 0; k <= n; ++k) {
    double acc = coeffs_[sz(k)];
    for (int i = 1; i <= k; ++i) acc -= other.coeffs_[sz(i)] * q[sz(k - i)];
    q[sz(k)] = acc / b0;
  }
  coeffs_ = std::move(q);
  return *this;
}

Jet& Jet::operator+=(double c) {
  coeffs_[0] += c;
  return *this;
}

Jet& Jet::operator-=(double c) {
  coeffs_[0] -= c;
  return *this;
}

Jet& Jet::operator*=(double c) {
  for (double& x : coeffs_) x *= c;
  return *this;
}

Jet& Jet::operator/=(double c) {
  for (double& x : coeffs_) x /= c;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, const Jet& b) { return a /= b; }
Jet operator+(Jet a, double c) { return a += c; }
Jet operator+(double c, Jet a) { return a += c; }
Jet operator-(Jet a, double c) { return a -= c; }
Jet operator-(double c, const Jet& a) { return (-a) += c; }
Jet operator*(Jet a, double c) { return a *= c; }
Jet operator*(double c, Jet a) { return a *= c; }
Jet operator/(Jet a, double c) { return a /= c; }
Jet operator/(double c, const Jet& a) {
  return Jet::constant(c, a.center(), a.order()) / a;
}

Jet exp(const Jet& x) {
  const int n = x.order();
  std::vector<double> e(sz(n + 1));
  e[0] = std::exp(x.value());
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += i * x[i] * e[sz(k - i)];
    e[sz(k)] = acc / k;
  }
  return Jet(x.center(), std::move(e));
}

Jet log(const Jet& x) {
  const double a0 = x.value();
  if (!(a0 > 0.0)) throw DomainError("jet log needs a positive value");
  const int n = x.order();
  std::vector<double> l(sz(n + 1));
  l[0] = std::log(a0);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 1; i < k; ++i) acc += i * l[sz(i)] * x[k - i];
    l[sz(k)] = (x[k] - acc / k) / a0;
  }
  return Jet(x.center(), std::move(l));
}

Jet sin(const Jet& x) {
  auto [s, c] = paired_series(x, std::sin(x.value()), std::cos(x.value()), -1.0);
  return Jet(x.center(), std::move(s));
}

Jet cos(const Jet& x) {
  auto [s, c] = paired_series(x, std::sin(x.value()), std::cos(x.value()), -1.0);
  return Jet(x.center(), std::move(c));
}

Jet sinh(const Jet& x) {
  auto [s, c] = paired_series(x, std::sinh(x.value()), std::cosh(x.value()), 1.0);
  return Jet(x.center(), std::move(s));
}

Jet cosh(const Jet& x) {
  auto [s, c] = paired_series(x, std::sinh(x.value()), std::cosh(x.value()), 1.0);
  return Jet(x.center(), std::move(c));
}

Jet sqrt(const Jet& x) { return pow(x, 0.5); }

Jet pow(const Jet& x, double alpha) {
  const double a0 = x.value();
  const bool integral = alpha == std::floor(alpha);
  if (a0 == 0.0) {
    if (integral && alpha >= 0.0) {
      Jet r = Jet::constant(1.0, x.center(), x.order());
      for (int i = 0; i < static_cast<int>(alpha); ++i) r *= x;
      return r;
    }
    throw DomainError("jet pow with zero base and exponent " + std::to_string(alpha));
  }
  if (!integral && a0 < 0.0)
    throw DomainError("jet pow with negative base and non-integer exponent");
  const int n = x.order();
  std::vector<double> p(sz(n + 1));
  p[0] = std::pow(a0, alpha);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += (alpha * i - (k - i)) * x[i] * p[sz(k - i)];
    p[sz(k)] = acc / (k * a0);
  }
  return Jet(x.center(), std::move(p));
}

Jet divide_removable(const Jet& num, const Jet& den) {
  if (num.center() != den.center() || num.order() != den.order())
    throw DomainError("jet arithmetic needs equal centers and orders");
  if (num.order() < 1) throw DomainError("removable division needs order >= 1");
  if (std::abs(num[0]) > 1e-8 * max_abs_coeff(num) || std::abs(den[0]) > 1e-8 * max_abs_coeff(den))
    throw DomainError("division is not removable: constant terms do not vanish");
  auto shifted = [](const Jet& j) {
    return Jet(j.center(), std::vector<double>(j.coeffs().begin() + 1, j.coeffs().end()));
  };
  return shifted(num) / shifted(den);
}

double max_abs_coeff(const Jet& x) {
  double m = 0.0;
  for (double c : x.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace ck
