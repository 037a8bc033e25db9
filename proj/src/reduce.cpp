#include "tdeg/reduce.hpp"

#include <string>
#include <utility>

#include "tdeg/error.hpp"

namespace tdeg {

TwoTransformCoefficients two_transform_coefficients(const Rat& d, long j, long k) {
  const Rat J(j), K(k);
  TwoTransformCoefficients c;
  c.a1 = d * J * (J * K + K - 1) / (K * K * (J * K - 1) * (J * K + K - 2));
  c.a2 = d * J / (K * K * (K - 1) * (J * K + K - 2));
  c.a3 = (1 - d * (J * K + K - 1) / ((K - 1) * (J * K - 1))) / (K * K * K);
  c.delta = d * J * (J * K + K - 1) / (K * K);
  return c;
}

Rat a2_as_printed(const Rat& d, long j, long k) {
  const Rat J(j), K(k);
  return d * J / ((K + 1) * K * K * (J * K + K - 2));
}

long min_k_positive(const Rat& d, long j) {
  if (d <= 0 || j < 1) throw Error(ErrorKind::InvalidParam, "min_k_positive needs d > 0 and j >= 1");
  for (long k = 2;; ++k) {
    const auto c = two_transform_coefficients(d, j, k);
    if (c.a1 > 0 && c.a2 > 0 && c.a3 > 0) return k;
  }
}

Poly Reduce2Certificate::two_transform() const {
  return a * Poly::linear_power(Rat(p), Rat(r), 3) + b * Poly::linear_power(Rat(p), Rat(s), 3);
}

Weight Reduce2Certificate::three_transform() const {
  std::vector<Rat> entries(static_cast<std::size_t>(period), Rat(0));
  for (const auto& [pos, coeff] : terms) entries[static_cast<std::size_t>(pos)] = coeff;
  return Weight(std::move(entries), Rat(0));
}

TransductionClaim Reduce2Certificate::claim() const {
  TransductionClaim c;
  c.source = Poly::linear_power(Rat(1), Rat(base_shift), 3);
  c.target = two_transform();
  c.weight = three_transform();
  c.constant_delta = constant_delta;
  c.note = "2-transform as a 3-transform plus a constant";
  return c;
}

Reduce2Certificate reduce_2transform(const Rat& a_in, const Rat& b_in, long p, long r_in, long s_in) {
  if (a_in <= 0 || b_in <= 0) throw Error(ErrorKind::BadPositions, "coefficients must be positive");
  if (p < 1 || r_in < 0 || s_in < 0 || r_in >= p || s_in >= p || r_in == s_in)
    throw Error(ErrorKind::BadPositions, "need 0 <= r, s < p with r != s; got p=" + std::to_string(p) +
                                             " r=" + std::to_string(r_in) + " s=" + std::to_string(s_in));
  Reduce2Certificate c;
  c.a = a_in;
  c.b = b_in;
  c.p = p;
  c.r = r_in;
  c.s = s_in;
  if (c.r > c.s) {
    std::swap(c.r, c.s);
    std::swap(c.a, c.b);
    c.swapped = true;
  }
  c.d = c.b / c.a;
  c.j = c.s - c.r;
  c.k = min_k_positive(c.d, c.j);
  const auto co = two_transform_coefficients(c.d, c.j, c.k);
  c.a1 = co.a1;
  c.a2 = co.a2;
  c.a3 = co.a3;
  c.a2_printed = a2_as_printed(c.d, c.j, c.k);
  c.period = p * c.k;
  c.r_positive = c.r > 0;
  const long k = c.k;
  if (c.r_positive) {
    c.base_shift = 0;
    c.terms = {{c.s * k - 1, c.a * co.a1}, {(c.r - 1) * k + 1, c.a * co.a2}, {c.r * k, c.a * co.a3}};
  } else {
    c.base_shift = -k;
    c.terms = {{(c.s + 1) * k - 1, c.a * co.a1}, {1, c.a * co.a2}, {k, c.a * co.a3}};
  }
  c.constant_delta = c.a * co.delta;
  return c;
}

}  // namespace tdeg
