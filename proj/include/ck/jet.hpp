#pragma once

#include <span>
#include <vector>

namespace ck {

/// Truncated Taylor expansion of a function of one real variable about
/// `center`. Coefficient i holds f^(i)(center) / i!.
class Jet {
 public:
  Jet(double center, std::vector<double> coeffs);

  /// The identity function x evaluated as a jet about `center`.
  static Jet variable(double center, int order);
  static Jet constant(double value, double center, int order);

  double center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double value() const noexcept { return coeffs_[0]; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  /// f^(k)(center).
  double derivative_value(int k) const;
  /// Jet of f', one order lower.
  Jet derivative() const;
  Jet truncated(int order) const;
  /// Sums the truncated series at x.
  double evaluate_at(double x) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(const Jet& other);
  Jet& operator/=(const Jet& other);
  Jet& operator+=(double c);
  Jet& operator-=(double c);
  Jet& operator*=(double c);
  Jet& operator/=(double c);

 private:
  void require_compatible(const Jet& other) const;

  double center_;
  std::vector<double> coeffs_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, const Jet& b);
Jet operator+(Jet a, double c);
Jet operator+(double c, Jet a);
Jet operator-(Jet a, double c);
Jet operator-(double c, const Jet& a);
Jet operator*(Jet a, double c);
Jet operator*(double c, Jet a);
Jet operator/(Jet a, double c);
Jet operator/(double c, const Jet& a);

Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet sinh(const Jet& x);
Jet cosh(const Jet& x);
Jet sqrt(const Jet& x);
Jet pow(const Jet& x, double alpha);

/// num / den where both vanish at the center (removable singularity). The
/// leading coefficients are dropped, so the result is one order lower.
Jet divide_removable(const Jet& num, const Jet& den);

/// Largest coefficient magnitude; the norm used by vector-valued quadrature.
double max_abs_coeff(const Jet& x);

}  // namespace ck
