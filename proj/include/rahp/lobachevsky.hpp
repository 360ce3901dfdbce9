#pragma once

#include <cmath>
#include <numbers>

namespace rahp {

/// A binary64 value together with a bound on its absolute error.
/// Arithmetic propagates bounds interval-style: errors of sums add, scaling
/// multiplies, and each operation adds its own rounding.
struct ErrBoundedValue {
  double value = 0.0;
  double abs_err = 0.0;

  ErrBoundedValue() = default;
  ErrBoundedValue(double v, double err = 0.0) : value(v), abs_err(err) {}

  double lower() const { return value - abs_err; }
  double upper() const { return value + abs_err; }
  bool contains(double x) const { return std::abs(x - value) <= abs_err; }

  ErrBoundedValue operator-() const { return {-value, abs_err}; }
  friend ErrBoundedValue operator+(const ErrBoundedValue& a, const ErrBoundedValue& b);
  friend ErrBoundedValue operator-(const ErrBoundedValue& a, const ErrBoundedValue& b);
  friend ErrBoundedValue operator*(double s, const ErrBoundedValue& a);
  friend ErrBoundedValue operator*(const ErrBoundedValue& a, double s) { return s * a; }
  friend ErrBoundedValue operator/(const ErrBoundedValue& a, double s) { return (1.0 / s) * a; }
  ErrBoundedValue& operator+=(const ErrBoundedValue& b) { return *this = *this + b; }
  ErrBoundedValue& operator-=(const ErrBoundedValue& b) { return *this = *this - b; }
};

struct Angle {
  double radians = 0.0;
};

/// Lobachevsky function, -integral_0^x log|2 sin t| dt.
///
/// The argument is reduced to [-pi/2, pi/2] using oddness and pi-periodicity,
/// then evaluated from
///   x (1 - log 2x) + sum_{n>=1} zeta(2n) / (n (2n+1)) * x (x/pi)^(2n),
/// whose terms shrink at least like 4^-n on the reduced range. The returned
/// error covers series truncation, rounding, and the range reduction.
/// Throws std::domain_error on a non-finite argument.
ErrBoundedValue lobachevsky(Angle x);

/// Lobachevsky function at an argument that is itself only known to within
/// arg_err; the extra error is folded into the result.
ErrBoundedValue lobachevsky(Angle x, double arg_err);

/// Volume of the regular ideal octahedron, 8 L(pi/4).
ErrBoundedValue v8();

/// Volume of the regular ideal tetrahedron, 3 L(pi/3).
ErrBoundedValue v3();

/// Orthoscheme with parameter alpha in [0, pi/2]: L(alpha) / 2.
ErrBoundedValue orthoscheme_volume(Angle alpha);

}  // namespace rahp
