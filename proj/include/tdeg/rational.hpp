#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tdeg {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws Error(Parse) on anything else,
/// including a zero denominator.
Rat parse_rat(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor and ceiling of a rational as integers.
Integer floor(const Rat& r);
Integer ceil(const Rat& r);

/// Narrowing to uint64 for block lengths. Throws Error(TooLarge) on
/// overflow and Error(NegativeBlock) on negative input.
std::uint64_t to_u64(const Integer& z);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Reduce a freshly constructed mpq to canonical form.
inline Rat make_rat(const Integer& num, const Integer& den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tdeg
