#pragma once

#include "rahp/lobachevsky.hpp"

namespace rahp {

/// Volume of the ideal right-angled antiprism A(n), n >= 3:
/// 2n [L(pi/4 + pi/2n) + L(pi/4 - pi/2n)].
ErrBoundedValue vol_antiprism(int n);

/// Dihedral parameter of the Loebell polytope L(n):
/// pi/2 - arccos(1 / (2 cos(pi/n))).
double loebell_theta(int n);

/// Volume of the compact right-angled Loebell polytope L(n), n >= 5:
/// (n/2) [2 L(t) + L(t + pi/n) + L(t - pi/n) - L(2t - pi/2)], t = loebell_theta(n).
ErrBoundedValue vol_loebell(int n);

}  // namespace rahp
