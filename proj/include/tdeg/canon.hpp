#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdeg/certificate.hpp"
#include "tdeg/rational.hpp"

namespace tdeg {

/// Witness chain for <(a n + b)^3> == <(a' n + 1)^3>:
///   (an+b)^3 -shift q-> (an+b0)^3 -divide by g^3-> (a'n+b')^3 -order-> (a'n+1)^3
/// with b = q a + b0, g = gcd(a, b0), and b'^i = a' m + 1 when b' > 1.
/// When b0 == 0 the chain ends at n^3, which is one shift away from (n+1)^3.
struct CanonCertificate {
  Integer a;
  Integer b;
  Integer shift_q;
  Integer b0;
  Integer g;
  Integer a_reduced;
  Integer b_reduced;
  std::optional<Integer> order_i;
  std::optional<Integer> order_m;
  Integer canonical;
  /// Human-readable equivalences, one per step.
  std::vector<std::string> chain;

  /// Both directions of every step as transduction claims. Steps whose
  /// weight would need more than max_samples entries, or whose machine would
  /// exceed the state cap, are left out and listed in `omitted`.
  std::vector<TransductionClaim> claims(std::uint64_t max_samples = 4096,
                                        std::vector<std::string>* omitted = nullptr) const;
};

struct Canonicalized {
  Integer canonical;
  CanonCertificate cert;
};

/// Canonical representative a' of <(a n + b)^3>, a' = a / gcd(a, b).
/// b may be any integer; negative or large offsets are first reduced mod a
/// by a shift. Throws Error(InvalidParam) for a < 1.
Canonicalized canonicalize_1transform(const Integer& a, const Integer& b);

}  // namespace tdeg
