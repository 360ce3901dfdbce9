#include "rahp/lobachevsky.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace rahp {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
// |fl(pi) - pi| < 1.23e-16.
constexpr double kPiRepresentationError = 1.3e-16;
constexpr int kTerms = 30;

double rounding(double result) { return kEps * std::abs(result); }

struct SeriesCoefficients {
  std::array<double, kTerms + 1> c{};  // c[n] = zeta(2n) / (n (2n + 1)), c[0] unused
  SeriesCoefficients() {
    for (int n = 1; n <= kTerms; ++n) {
      c[n] = std::riemann_zeta(2.0 * n) / (n * (2.0 * n + 1.0));
    }
  }
};

const SeriesCoefficients& coefficients() {
  static const SeriesCoefficients table;
  return table;
}

// L(y) for y in (0, pi/2] with its evaluation error.
ErrBoundedValue series(double y) {
  const auto& c = coefficients().c;
  const double q = (y / kPi) * (y / kPi);
  double power = 1.0;
  double tail_sum = 0.0;
  for (int n = 1; n <= kTerms; ++n) {
    power *= q;
    tail_sum += c[n] * power;
  }
  const double log_part = y * (1.0 - std::log(2.0 * y));
  const double value = log_part + y * tail_sum;
  // Remaining terms: zeta(2n) <= zeta(2) and q <= 1/4.
  const double truncation = 1.645 * y * power * q /
                            ((kTerms + 1.0) * (2.0 * kTerms + 3.0) * (1.0 - q));
  const double magnitude = y * (1.0 + std::abs(std::log(2.0 * y))) + y * tail_sum;
  const double round_off = 32.0 * kEps * magnitude;
  return {value, truncation + round_off};
}

// Bound on |L(x') - L(x)| for |x' - x| <= delta, where |L'(t)| = |log|2 sin t||.
double argument_sensitivity(double reduced, double delta) {
  if (delta <= 0.0) return 0.0;
  const double s = std::abs(std::sin(reduced));
  if (s > 2.0 * delta) {
    const double lo = std::abs(std::log(2.0 * (s - delta)));
    const double hi = std::abs(std::log(2.0 * std::min(1.0, s + delta)));
    return delta * std::max(lo, hi) + rounding(delta);
  }
  return 8.0 * delta * (2.0 + std::abs(std::log(delta)));
}

}  // namespace

ErrBoundedValue operator+(const ErrBoundedValue& a, const ErrBoundedValue& b) {
  const double v = a.value + b.value;
  return {v, a.abs_err + b.abs_err + rounding(v)};
}

ErrBoundedValue operator-(const ErrBoundedValue& a, const ErrBoundedValue& b) {
  const double v = a.value - b.value;
  return {v, a.abs_err + b.abs_err + rounding(v)};
}

ErrBoundedValue operator*(double s, const ErrBoundedValue& a) {
  const double v = s * a.value;
  return {v, std::abs(s) * a.abs_err + rounding(v)};
}

ErrBoundedValue lobachevsky(Angle x, double arg_err) {
  if (!std::isfinite(x.radians) || !std::isfinite(arg_err) || arg_err < 0.0) {
    throw std::domain_error("lobachevsky: non-finite input");
  }
  // remainder() is exact relative to fl(pi); only the period count times the
  // representation error of pi is lost.
  const double reduced = std::remainder(x.radians, kPi);
  const double periods = std::round((x.radians - reduced) / kPi);
  const double delta = arg_err + std::abs(periods) * kPiRepresentationError +
                       (periods != 0.0 ? rounding(reduced) : 0.0);

  const double y = std::abs(reduced);
  ErrBoundedValue core = y == 0.0 ? ErrBoundedValue{0.0, 0.0} : series(y);
  if (reduced < 0.0) core = -core;
  core.abs_err += argument_sensitivity(reduced, delta);
  return core;
}

ErrBoundedValue lobachevsky(Angle x) { return lobachevsky(x, 0.0); }

ErrBoundedValue v8() {
  static const ErrBoundedValue value = 8.0 * lobachevsky(Angle{kPi / 4.0}, rounding(kPi / 4.0));
  return value;
}

ErrBoundedValue v3() {
  static const ErrBoundedValue value = 3.0 * lobachevsky(Angle{kPi / 3.0}, rounding(kPi / 3.0));
  return value;
}

ErrBoundedValue orthoscheme_volume(Angle alpha) {
  if (!(alpha.radians >= 0.0 && alpha.radians <= kPi / 2.0)) {
    throw std::domain_error("orthoscheme parameter outside [0, pi/2]");
  }
  return 0.5 * lobachevsky(alpha);
}

}  // namespace rahp
