#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdeg/fst.hpp"
#include "tdeg/poly.hpp"
#include "tdeg/stream.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

/// Polynomial-level transduction claim <source> >= <target>, witnessed by
///   target(n + target_shift) == (weight (x) S^skip source)(n) + constant_delta
/// for every n. Constant deltas are discharged by <f + c> == <f>.
struct TransductionClaim {
  Poly source;
  Poly target;
  Weight weight = Weight::identity();
  std::uint64_t skip = 0;
  std::uint64_t target_shift = 0;
  Rat constant_delta = 0;
  std::string note;

  friend bool operator==(const TransductionClaim&, const TransductionClaim&) = default;
};

/// Exact check of the claim's polynomial identity.
bool claim_holds(const TransductionClaim& c);

/// A claim compiled down to machines over concrete streams.
///
/// Both sides are rescaled to integer-valued polynomials and given their
/// least nonnegative offsets. The machine cascade is
///   weight machine (integral, constant absorbs offsets and delta)
///   -> scale_down counters whose product is `scale`
///   -> remove_const(removed) -> prepend(prefix)
/// with the trivial stages left out.
struct TransductionCertificate {
  TransductionClaim claim;
  StreamSpec source;
  StreamSpec target;
  Integer source_scale = 1;
  Integer target_scale = 1;
  Weight machine_weight = Weight::identity();
  Integer scale = 1;
  Integer removed = 0;
  BitWord prefix;
  std::vector<Fst> stages;
  /// All stages composed into one machine, when small enough.
  std::optional<Fst> composed;

  /// Source blocks that always suffice to produce `blocks` target blocks.
  std::uint64_t source_blocks_for(std::uint64_t blocks) const;
};

struct CertifyOptions {
  std::size_t max_composed_states = std::size_t{1} << 18;
  /// Rough cap on output bits pushed through later stages while composing.
  std::uint64_t max_compose_work = std::uint64_t{1} << 24;
  std::uint64_t max_prefix_bits = std::uint64_t{1} << 26;
};

/// Compiles a claim. Throws Error(ClaimFalse) if the identity fails,
/// Error(TooLarge) if a stage cannot be materialized and
/// Error(ChainNotRealizable) if the stages cannot be assembled.
TransductionCertificate build_certificate(const TransductionClaim& claim, const CertifyOptions& opts = {});

/// Replays the composed machine (or the cascade when composition was too
/// large) for `blocks` target blocks.
VerifyResult replay(const TransductionCertificate& cert, std::uint64_t blocks);

struct CertifiedStream {
  TransductionCertificate certificate;
  VerifyResult result;
};

CertifiedStream certify_stream(const TransductionClaim& claim, std::uint64_t blocks, const CertifyOptions& opts = {});

}  // namespace tdeg
