#pragma once

#include <vector>

#include "tdeg/certificate.hpp"
#include "tdeg/poly.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

/// Coefficients of the identity
///   n^3 + d (n+j)^3 = a1 (kn+jk-1)^3 + a2 (kn-k+1)^3 + a3 (kn)^3 + delta
/// which matches the n^3, n^2 and n terms exactly and leaves the constant
/// mismatch delta = d j (jk+k-1) / k^2.
struct TwoTransformCoefficients {
  Rat a1;
  Rat a2;
  Rat a3;
  Rat delta;
};

/// Requires d > 0, j >= 1, k >= 2.
TwoTransformCoefficients two_transform_coefficients(const Rat& d, long j, long k);

/// a2 as it is usually printed, dj / ((k+1) k^2 (jk+k-2)); kept only so the
/// correction can be reported alongside certificates.
Rat a2_as_printed(const Rat& d, long j, long k);

/// Least k >= 2 with a1, a2, a3 > 0.
long min_k_positive(const Rat& d, long j);

struct Reduce2Certificate {
  Rat a;
  Rat b;
  long p = 0;
  long r = 0;
  long s = 0;
  /// Inputs arrived with r > s and were swapped (together with a and b).
  bool swapped = false;
  Rat d;
  long j = 0;
  long k = 0;
  Rat a1;
  Rat a2;
  Rat a3;
  Rat a2_printed;
  bool r_positive = false;
  long period = 0;      // p k
  long base_shift = 0;  // 0, or -k when r == 0
  /// (position, coefficient) for a*a1, a*a2, a*a3 in that order.
  std::vector<std::pair<long, Rat>> terms;
  /// (a(pn+r)^3 + b(pn+s)^3) - (three_transform (x) (n + base_shift)^3)
  Rat constant_delta;

  /// a(pn+r)^3 + b(pn+s)^3
  Poly two_transform() const;
  /// Weight with `period` entries, nonzero exactly at the three positions.
  Weight three_transform() const;
  /// <(n + base_shift)^3> >= <two_transform>, via three_transform.
  TransductionClaim claim() const;
};

/// Rewrites the 2-transform a(pn+r)^3 + b(pn+s)^3 as a 3-transform of
/// (n + base_shift)^3 plus a constant. Needs a, b > 0 and 0 <= r, s < p with
/// r != s; otherwise throws Error(BadPositions).
Reduce2Certificate reduce_2transform(const Rat& a, const Rat& b, long p, long r, long s);

}  // namespace tdeg
