#pragma once

#include <complex>

#include "liecomb/rational.hpp"

namespace liecomb {

// Exact element of Q(i), enough arithmetic for torus-point powers and sums.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {0, 1}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline Rational abs2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

inline GaussianRational inverse(const GaussianRational& z) {
  Rational n = abs2(z);
  if (n == 0) throw std::domain_error("GaussianRational: inverse of zero");
  return {z.re / n, -z.im / n};
}

// Scalar-tower shims shared by the templated character code.
inline double abs2(const std::complex<double>& z) { return std::norm(z); }
inline std::complex<double> inverse(const std::complex<double>& z) { return 1.0 / z; }
inline GaussianRational scalar_from_long(GaussianRational*, long n) {
  return GaussianRational(Rational(n));
}
inline std::complex<double> scalar_from_long(std::complex<double>*, long n) {
  return {static_cast<double>(n), 0.0};
}

template <typename S>
S power(const S& base, long e) {
  S b = e < 0 ? inverse(base) : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  S acc = scalar_from_long(static_cast<S*>(nullptr), 1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline double to_double(const Rational& x) {
  return static_cast<double>(numerator(x)) / static_cast<double>(denominator(x));
}

inline std::complex<double> to_complex(const GaussianRational& z) {
  return {to_double(z.re), to_double(z.im)};
}

}  // namespace liecomb
