#pragma once

#include "tdeg/rational.hpp"

namespace tdeg {

/// Least i >= 1 with b^i = 1 (mod a); 1 when a == 1.
/// Throws Error(NotCoprime) when gcd(a, b) != 1, Error(InvalidParam) for a < 1.
Integer multiplicative_order(const Integer& b, const Integer& a);

/// Nonnegative residue of x modulo a positive m.
Integer mod_floor(const Integer& x, const Integer& m);

}  // namespace tdeg
