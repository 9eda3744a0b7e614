#pragma once

// Extended-precision scalars for the contour integrals. Their integrands are
// amplified by e^{(σ²+r²)/4t} relative to the result, so double precision
// loses most digits to cancellation at small t.

#include <boost/multiprecision/mpfr.hpp>

namespace ck {

using Mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                         boost::multiprecision::et_off>;

inline double to_double(double x) { return x; }
inline double to_double(const Mp& x) { return x.convert_to<double>(); }

/// Minimal complex arithmetic over a real type that std::complex does not
/// officially support. Only what the contour integrands use.
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT: implicit like std::complex
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { a.re *= s; a.im *= s; return a; }
  friend Complex operator*(const Real& s, Complex a) { return a * s; }
};

template <class Real>
Real abs(const Complex<Real>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class Real>
Complex<Real> exp(const Complex<Real>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal branch.
template <class Real>
Complex<Real> log(const Complex<Real>& z) {
  using std::atan2;
  using std::hypot;
  using std::log;
  return {log(hypot(z.re, z.im)), atan2(z.im, z.re)};
}

template <class Real>
Complex<Real> sin(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class Real>
Complex<Real> cos(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

template <class Real>
Complex<Real> sinh(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

template <class Real>
Complex<Real> cosh(const Complex<Real>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

/// Principal power z^p = exp(p log z).
template <class Real>
Complex<Real> pow(const Complex<Real>& z, const Real& p) {
  return exp(log(z) * p);
}

}  // namespace ck
