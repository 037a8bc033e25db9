#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tdeg/poly.hpp"

namespace tdeg {

/// A transducer degree at or below <n^3>.
class CanonicalDegree {
 public:
  enum class Kind { Zero, Bottom3, OneT };

  static CanonicalDegree zero() { return CanonicalDegree(Kind::Zero, 0); }
  static CanonicalDegree bottom() { return CanonicalDegree(Kind::Bottom3, 0); }
  /// Degree of <(a n + 1)^3>; one_t(1) is <n^3> itself.
  static CanonicalDegree one_t(std::uint64_t a);

  Kind kind() const { return kind_; }
  /// Modulus of a OneT degree; 0 otherwise.
  std::uint64_t modulus() const { return a_; }

  /// Stream polynomial standing for this degree: (an+1)^3, the 3-transform
  /// <1,1,1,0> (x) n^3, or the constant 1.
  Poly representative() const;

  friend bool operator==(const CanonicalDegree&, const CanonicalDegree&) = default;

 private:
  CanonicalDegree(Kind k, std::uint64_t a) : kind_(k), a_(a) {}
  Kind kind_;
  std::uint64_t a_;
};

/// "Zero", "Bottom3", "OneT(6)".
std::string to_string(const CanonicalDegree& d);

/// Accepts "zero" / "0", "bottom", "one:N", "OneT(N)" or a bare positive
/// integer N. Throws Error(Parse).
CanonicalDegree parse_degree(std::string_view text);

enum class Order { equivalent, above, below, incomparable };

std::string_view to_string(Order o);

/// Zero < Bottom3 < every OneT(a); OneT(a) >= OneT(b) iff a | b.
Order compare(const CanonicalDegree& x, const CanonicalDegree& y);

}  // namespace tdeg
