#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tdeg/bridge.hpp"
#include "tdeg/canon.hpp"
#include "tdeg/certificate.hpp"
#include "tdeg/degree.hpp"
#include "tdeg/reduce.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

/// Degree of alpha (x) (n+t)^3 with its supporting witnesses.
struct Classification {
  CanonicalDegree degree = CanonicalDegree::zero();
  Weight weight = Weight::identity();
  long shift = 0;
  /// alpha (x) (n+t)^3
  Poly product;
  std::vector<std::string> chain;
  /// Replayable transductions backing the classification.
  std::vector<TransductionClaim> claims;
  /// Claims not emitted because their machines would be too large.
  std::vector<std::string> omitted;

  std::optional<Reduce2Certificate> reduce2;
  /// product(n) = reduce2->two_transform(n + reduce2_outer_shift) + alpha's
  /// constant; a rational shift when the two positions straddle a period.
  Rat reduce2_outer_shift = 0;
  std::optional<CanonCertificate> canon;
  std::optional<SearchedWitness> bottom;
};

/// Classifies alpha (x) (n+t)^3:
///   no positive entry   -> Zero
///   one positive entry  -> OneT(k / gcd(k, i + t)), k = samples
///   two positive entries -> Bottom3 through the 2-transform reduction
///   three or more        -> Bottom3 through a perturbation witness
/// q_eps fixes the perturbation cubic; by default 10^-j is searched.
Classification classify(const Weight& alpha, long t, const std::optional<Poly>& q_eps = std::nullopt);

/// Tuple input: collapses to a single weight over n^3 when the tuple product
/// is a polynomial, otherwise nullopt with `why` filled in.
std::optional<Classification> classify_tuple(const WeightTuple& tuple, std::string* why = nullptr);

/// Claim witnessing x >= y on representative streams; nullopt unless
/// compare(x, y) is above or equivalent.
std::optional<TransductionClaim> order_claim(const CanonicalDegree& x, const CanonicalDegree& y);

}  // namespace tdeg
