#include "rahp/closed_volumes.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace rahp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Allowance for one call to the platform arccos.
constexpr double kAcosError = 1e-14;

}  // namespace

ErrBoundedValue vol_antiprism(int n) {
  if (n < 3) throw std::domain_error("antiprism needs n >= 3, got " + std::to_string(n));
  const double shift = kPi / (2.0 * n);
  const double arg_err = 4.0 * kEps;
  const auto sum = lobachevsky(Angle{kPi / 4.0 + shift}, arg_err) +
                   lobachevsky(Angle{kPi / 4.0 - shift}, arg_err);
  return (2.0 * n) * sum;
}

double loebell_theta(int n) {
  if (n < 5) throw std::domain_error("Loebell polytope needs n >= 5, got " + std::to_string(n));
  return kPi / 2.0 - std::acos(1.0 / (2.0 * std::cos(kPi / n)));
}

ErrBoundedValue vol_loebell(int n) {
  const double theta = loebell_theta(n);
  // cos, the division, and arccos each round; arccos dominates.
  const double theta_err = kAcosError + 8.0 * kEps;
  const double step = kPi / n;
  auto L = [](double x, double err) { return lobachevsky(Angle{x}, err); };
  const auto bracket = 2.0 * L(theta, theta_err) + L(theta + step, theta_err + 4.0 * kEps) +
                       L(theta - step, theta_err + 4.0 * kEps) -
                       L(2.0 * theta - kPi / 2.0, 2.0 * theta_err + 4.0 * kEps);
  return (n / 2.0) * bracket;
}

}  // namespace rahp
